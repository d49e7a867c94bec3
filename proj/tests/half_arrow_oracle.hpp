#pragma once

// Literal transcription of the published JavaScript half-arrow routine, kept
// deliberately separate from the library so the two can be compared. Variable
// names and statement order follow the original; `null` operands evaluate to 0
// as they do in JavaScript arithmetic.

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "odflow/flow_path.hpp"

namespace oracle {

struct HalfArrowPoints {
  double x0, y0, xc1, yc1, xc13rd, yc13rd, xc23rd, yc23rd, xc2, yc2, x3elbow1, y3elbow1, x3, y3, x23rd, y23rd,
      x13rd, y13rd;
};

inline std::optional<HalfArrowPoints> draw_curve(double x0, double y0, double x3, double y3, double flowSize,
                                                 double sourceRadius, double targetRadius, bool righthandrul) {
  double arrowlen = 2.42;
  double arrowwidthconstant = flowSize * 1.1;
  if (flowSize < 10 && flowSize >= 8) {
    arrowlen = 2.64;
    arrowwidthconstant = flowSize * 1.2;
  } else if (flowSize < 8 && flowSize >= 6) {
    arrowlen = 3.08;
    arrowwidthconstant = flowSize * 1.4;
  } else if (flowSize < 6 && flowSize >= 4) {
    arrowlen = 4.4;
    arrowwidthconstant = flowSize * 2;
  } else if (flowSize < 4 && flowSize >= 3) {
    arrowlen = 6.6;
    arrowwidthconstant = flowSize * 3;
  } else if (flowSize < 3 && flowSize >= 2) {
    arrowlen = 8.8;
    arrowwidthconstant = flowSize * 4;
  } else if (flowSize < 2) {
    arrowlen = 11;
    arrowwidthconstant = flowSize * 5;
  }

  double ndsize0 = sourceRadius;
  double ndsize3 = targetRadius;
  double dx = std::fabs(x3 - x0);
  double dy = std::fabs(y3 - y0);
  double len = std::sqrt(dx * dx + dy * dy);
  if (len < (ndsize0 + ndsize3) * 1.2) return std::nullopt;

  bool haselbow = true;
  if (haselbow) {
    x0 = x0 + (x3 - x0) * ndsize0 / len;
    y0 = y0 + (y3 - y0) * ndsize0 / len;
    x3 = x3 - (x3 - x0) * ndsize3 / (len - ndsize0);
    y3 = y3 - (y3 - y0) * ndsize3 / (len - ndsize0);
  }

  double xc1 = 0, yc1 = 0, xc2 = 0, yc2 = 0;
  double x3elbow1 = 0, y3elbow1 = 0;
  double sign = -1;

  double xdelta = 0, ydelta = 0;
  double xarrowdelta = 0, yarrowdelta = 0, xgap = 0, ygap = 0;
  double gap = flowSize * 0.05;
  if (y0 == y3) {
    xdelta = 0;
    ydelta = flowSize / 2;
    xarrowdelta = 0;
    yarrowdelta = arrowwidthconstant / 1.0;
    xgap = 0;
    ygap = gap;
  } else if (x0 == x3) {
    ydelta = 0;
    xdelta = flowSize / 2;
    yarrowdelta = 0;
    xarrowdelta = arrowwidthconstant / 1.0;
    xgap = gap;
    ygap = 0;
  } else {
    double v = (x3 - x0) / (y0 - y3);
    xdelta = flowSize / 2.0 / std::sqrt(1 + v * v);
    ydelta = std::fabs(xdelta * v);
    xarrowdelta = arrowwidthconstant / std::sqrt(1 + v * v);
    yarrowdelta = std::fabs(xarrowdelta * v);
    xgap = gap / std::sqrt(1 + v * v);
    ygap = std::fabs(ygap * v);
    if (v < 0) sign = 1;
  }
  x0 = (y0 > y3) ? x0 + xgap : x0 - xgap;
  x3 = (y0 > y3) ? x3 + xgap : x3 - xgap;
  y0 = (x0 > x3) ? y0 - ygap : y0 + ygap;
  y3 = (x0 > x3) ? y3 - ygap : y3 + ygap;

  double x13rd, y13rd, x23rd, y23rd, xc13rd, yc13rd, xc23rd, yc23rd;
  if (righthandrul) {
    xc1 = (y0 > y3) ? x0 + xdelta / 2 : x0 - xdelta / 2;
    yc1 = (x0 > x3) ? y0 - ydelta / 2 : y0 + ydelta / 2;
    yc2 = (x0 > x3) ? y3 - ydelta + arrowlen * xdelta * sign : y3 + ydelta - arrowlen * xdelta * sign;
    xc2 = (y0 > y3) ? x3 + xdelta + arrowlen * ydelta * sign : x3 - xdelta - arrowlen * ydelta * sign;
    x3elbow1 = (y0 > y3) ? x3 + xarrowdelta + arrowlen * ydelta * sign : x3 - xarrowdelta - arrowlen * ydelta * sign;
    y3elbow1 = (x0 > x3) ? y3 - yarrowdelta + arrowlen * xdelta * sign : y3 + yarrowdelta - arrowlen * xdelta * sign;
    double arcxdelta = xdelta * len / 4 / flowSize;
    double arcydelta = ydelta * len / 4 / flowSize;
    x13rd = (y0 > y3) ? x0 + arcxdelta : x0 - arcxdelta;
    y13rd = (x0 > x3) ? y0 - arcydelta : y0 + arcydelta;
    x23rd = (y0 > y3) ? x0 + (x3 - x0) / 3 + arcxdelta : x0 + (x3 - x0) / 3 - arcxdelta;
    y23rd = (x0 > x3) ? y0 + (y3 - y0) / 3 - arcydelta : y0 + (y3 - y0) / 3 + arcydelta;
    arcxdelta = arcxdelta + xdelta;
    arcydelta = arcydelta + ydelta;
    xc13rd = (y0 > y3) ? x0 + arcxdelta : x0 - arcxdelta;
    yc13rd = (x0 > x3) ? y0 - arcydelta : y0 + arcydelta;
    xc23rd = (y0 > y3) ? x0 + (x3 - x0) / 3 + arcxdelta : x0 + (x3 - x0) / 3 - arcxdelta;
    yc23rd = (x0 > x3) ? y0 + (y3 - y0) / 3 - arcydelta : y0 + (y3 - y0) / 3 + arcydelta;
  } else {
    xc1 = (y0 < y3) ? x0 + xdelta / 2 : x0 - xdelta / 2;
    yc1 = (x0 < x3) ? y0 - ydelta / 2 : y0 + ydelta / 2;
    yc2 = (x0 < x3) ? y3 - ydelta + 2.5 * xdelta * sign : y3 + ydelta - 2.5 * xdelta * sign;
    xc2 = (y0 < y3) ? x3 + xdelta + 2.5 * ydelta * sign : x3 - xdelta - 2.5 * ydelta * sign;
    x3elbow1 = (y0 < y3) ? x3 + xarrowdelta + 2.5 * ydelta * sign : x3 - xarrowdelta - 2.5 * ydelta * sign;
    y3elbow1 = (x0 < x3) ? y3 - yarrowdelta + 2.5 * xdelta * sign : y3 + yarrowdelta - 2.5 * xdelta * sign;
    double arcxdelta = xdelta * len / 4 / flowSize;
    double arcydelta = ydelta * len / 4 / flowSize;
    x13rd = (y0 < y3) ? x0 + arcxdelta : x0 - arcxdelta;
    y13rd = (x0 < x3) ? y0 - arcydelta : y0 + arcydelta;
    x23rd = (y0 < y3) ? x0 + (x3 - x0) / 3 + arcxdelta : x0 + (x3 - x0) / 3 - arcxdelta;
    y23rd = (x0 < x3) ? y0 + (y3 - y0) / 3 - arcydelta : y0 + (y3 - y0) / 3 + arcydelta;
    arcxdelta = arcxdelta + xdelta;
    arcydelta = arcydelta + ydelta;
    xc13rd = (y0 < y3) ? x0 + arcxdelta : x0 - arcxdelta;
    yc13rd = (x0 < x3) ? y0 - arcydelta : y0 + arcydelta;
    xc23rd = (y0 < y3) ? x0 + (x3 - x0) / 3 + arcxdelta : x0 + (x3 - x0) / 3 - arcxdelta;
    yc23rd = (x0 < x3) ? y0 + (y3 - y0) / 3 - arcydelta : y0 + (y3 - y0) / 3 + arcydelta;
  }
  return HalfArrowPoints{x0,    y0,    xc1,      yc1,      xc13rd, yc13rd, xc23rd, yc23rd, xc2,
                         yc2,   x3elbow1, y3elbow1, x3,   y3,     x23rd,  y23rd,  x13rd,  y13rd};
}

struct CurveCase {
  double x0, y0, x3, y3, width, r0, r3;
  bool right;
};

// 200 inputs: every width band with both sides of each breakpoint, both
// traffic rules, horizontal, vertical and generic slopes, and center
// distances on and around the suppression boundary.
inline std::vector<CurveCase> fidelity_cases(unsigned seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-400, 400), radius(0, 12), unit(0, 1);
  const double widths[] = {0.5, 1.5, 1.999, 2, 2.5, 2.999, 3, 3.5, 3.999, 4, 5, 5.999,
                           6, 7, 7.999, 8, 9, 9.999, 10, 14};
  std::vector<CurveCase> out;
  for (int i = 0; i < 200; ++i) {
    CurveCase c{};
    c.width = (i % 3 == 2) ? 0.25 + 15 * unit(rng) : widths[static_cast<std::size_t>(i) % std::size(widths)];
    c.right = (i % 2) == 0;
    c.r0 = radius(rng);
    c.r3 = radius(rng);
    c.x0 = coord(rng);
    c.y0 = coord(rng);
    switch (i % 5) {
      case 0:  // horizontal
        c.x3 = coord(rng);
        c.y3 = c.y0;
        break;
      case 1:  // vertical
        c.x3 = c.x0;
        c.y3 = coord(rng);
        break;
      case 2: {  // exactly at, or just either side of, the suppression distance
        const double angle = 2 * 3.141592653589793 * unit(rng);
        const double limit = (c.r0 + c.r3) * 1.2;
        const double scale[] = {1.0, 1.0 - 1e-9, 1.0 + 1e-9, 0.5, 3.0};
        const double d = limit * scale[static_cast<std::size_t>(i / 5) % 5];
        c.x3 = c.x0 + d * std::cos(angle);
        c.y3 = c.y0 + d * std::sin(angle);
        break;
      }
      default:
        c.x3 = coord(rng);
        c.y3 = coord(rng);
    }
    out.push_back(c);
  }
  return out;
}

// Largest coordinate difference between the library's curve_half_arrow path in
// fidelity mode and the transcription. Infinity when exactly one of the two
// suppresses the flow; zero when both suppress.
inline double fidelity_error(const CurveCase& c) {
  const auto want = draw_curve(c.x0, c.y0, c.x3, c.y3, c.width, c.r0, c.r3, c.right);
  const auto got = odflow::flow_path(odflow::FlowStyle::curve_half_arrow, {c.x0, c.y0}, {c.x3, c.y3}, c.width, c.r0,
                                     c.r3, c.right ? odflow::TrafficRule::right : odflow::TrafficRule::left,
                                     odflow::PathMode::fidelity);
  if (!want && !got) return 0.0;
  if (!want || !got) return std::numeric_limits<double>::infinity();
  const auto& w = *want;
  // Return-statement order: M P0 L P1 C CP1_C1 CP2_C1 P2 L EP3 L P3 C CP1_C2 CP2_C2 P0.
  const std::vector<std::pair<char, std::vector<odflow::Vec2>>> expected = {
      {'M', {{w.x0, w.y0}}},
      {'L', {{w.xc1, w.yc1}}},
      {'C', {{w.xc13rd, w.yc13rd}, {w.xc23rd, w.yc23rd}, {w.xc2, w.yc2}}},
      {'L', {{w.x3elbow1, w.y3elbow1}}},
      {'L', {{w.x3, w.y3}}},
      {'C', {{w.x23rd, w.y23rd}, {w.x13rd, w.y13rd}, {w.x0, w.y0}}}};
  if (got->commands.size() != expected.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& cmd = got->commands[i];
    if (cmd.op != expected[i].first || cmd.points.size() != expected[i].second.size()) {
      return std::numeric_limits<double>::infinity();
    }
    for (std::size_t k = 0; k < cmd.points.size(); ++k) {
      worst = std::max({worst, std::fabs(cmd.points[k].x - expected[i].second[k].x),
                        std::fabs(cmd.points[k].y - expected[i].second[k].y)});
    }
  }
  return worst;
}

}  // namespace oracle
