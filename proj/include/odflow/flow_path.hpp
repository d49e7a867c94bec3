#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odflow/numeric.hpp"

namespace odflow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

enum class FlowStyle { curve_half_arrow, straight_half_arrow, tapered, teardrop };
enum class TrafficRule { right, left };

/// fidelity reproduces the published half-arrow routine including its two
/// quirks (zero y-gap on sloped lines, literal 2.5 arrow length on the
/// left-hand branch); corrected fixes both.
enum class PathMode { fidelity, corrected };

inline constexpr std::string_view to_string(FlowStyle s) {
  switch (s) {
    case FlowStyle::curve_half_arrow: return "curve_half_arrow";
    case FlowStyle::straight_half_arrow: return "straight_half_arrow";
    case FlowStyle::tapered: return "tapered";
    case FlowStyle::teardrop: return "teardrop";
  }
  return "";
}

inline std::optional<FlowStyle> parse_flow_style(std::string_view s) {
  for (auto v : {FlowStyle::curve_half_arrow, FlowStyle::straight_half_arrow, FlowStyle::tapered,
                 FlowStyle::teardrop}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

inline constexpr std::string_view to_string(TrafficRule r) { return r == TrafficRule::right ? "right" : "left"; }
inline std::optional<TrafficRule> parse_traffic_rule(std::string_view s) {
  if (s == "right") return TrafficRule::right;
  if (s == "left") return TrafficRule::left;
  return std::nullopt;
}

inline constexpr std::string_view to_string(PathMode m) { return m == PathMode::fidelity ? "fidelity" : "corrected"; }
inline std::optional<PathMode> parse_path_mode(std::string_view s) {
  if (s == "fidelity") return PathMode::fidelity;
  if (s == "corrected") return PathMode::corrected;
  return std::nullopt;
}

struct ArrowConstants {
  double arrowlen = 0.0;
  double arrowwidth = 0.0;
  bool operator==(const ArrowConstants&) const = default;
};

/// Half-arrow size bands; thinner flows get proportionally larger heads.
inline ArrowConstants arrow_constants(double w) {
  if (w >= 10) return {2.42, w * 1.1};
  if (w >= 8) return {2.64, w * 1.2};
  if (w >= 6) return {3.08, w * 1.4};
  if (w >= 4) return {4.4, w * 2};
  if (w >= 3) return {6.6, w * 3};
  if (w >= 2) return {8.8, w * 4};
  return {11, w * 5};
}

struct PathCommand {
  char op = 'M';  // M, L, C or Z
  std::vector<Vec2> points;
};

/// Resolved geometry of one flow symbol in screen pixels.
struct PathSpec {
  FlowStyle style = FlowStyle::curve_half_arrow;
  std::vector<PathCommand> commands;
  bool closed = true;

  // Construction points. For teardrop these belong to the reversed
  // (destination-to-origin) construction.
  Vec2 p0, p1, p2, p3, ep3;
  Vec2 cp1_c1, cp2_c1, cp1_c2, cp2_c2;
  Vec2 taper_cp2;  // second outer control for tapered / teardrop
  Vec2 clip0, clip3;  // circle-periphery points before the gap offset
  double center_distance = 0.0;
};

namespace detail {

struct HalfArrowConstruction {
  Vec2 p0, p1, p2, p3, ep3;
  Vec2 cp1_c1, cp2_c1, cp1_c2, cp2_c2, taper_cp2;
  Vec2 clip0, clip3;
  double len = 0.0;
};

inline std::optional<HalfArrowConstruction> construct_half_arrow(Vec2 origin, Vec2 dest, double flow_width,
                                                                 double source_radius, double target_radius,
                                                                 TrafficRule rule, PathMode mode) {
  const auto arrow = arrow_constants(flow_width);
  const double dx = std::fabs(dest.x - origin.x);
  const double dy = std::fabs(dest.y - origin.y);
  const double len = std::sqrt(dx * dx + dy * dy);
  if (len < (source_radius + target_radius) * 1.2) return std::nullopt;
  if (!(len > 0.0)) return std::nullopt;

  HalfArrowConstruction c;
  c.len = len;

  // Clip to the circle peripheries. The destination uses the already moved
  // origin, which lands on the same periphery point.
  double x0 = origin.x + (dest.x - origin.x) * source_radius / len;
  double y0 = origin.y + (dest.y - origin.y) * source_radius / len;
  double x3 = dest.x - (dest.x - x0) * target_radius / (len - source_radius);
  double y3 = dest.y - (dest.y - y0) * target_radius / (len - source_radius);
  c.clip0 = {x0, y0};
  c.clip3 = {x3, y3};

  double sign = -1;
  double xdelta, ydelta, xarrowdelta, yarrowdelta, xgap, ygap;
  const double gap = flow_width * 0.05;
  if (y0 == y3) {
    xdelta = 0;
    ydelta = flow_width / 2;
    xarrowdelta = 0;
    yarrowdelta = arrow.arrowwidth / 1.0;
    xgap = 0;
    ygap = gap;
  } else if (x0 == x3) {
    ydelta = 0;
    xdelta = flow_width / 2;
    yarrowdelta = 0;
    xarrowdelta = arrow.arrowwidth / 1.0;
    xgap = gap;
    ygap = 0;
  } else {
    const double v = (x3 - x0) / (y0 - y3);
    const double norm = std::sqrt(1 + v * v);
    xdelta = flow_width / 2.0 / norm;
    ydelta = std::fabs(xdelta * v);
    xarrowdelta = arrow.arrowwidth / norm;
    yarrowdelta = std::fabs(xarrowdelta * v);
    xgap = gap / norm;
    ygap = mode == PathMode::corrected ? std::fabs(xgap * v) : 0.0;
    if (v < 0) sign = 1;
  }

  // Order matters: the y offsets compare the already shifted x values.
  x0 = (y0 > y3) ? x0 + xgap : x0 - xgap;
  x3 = (y0 > y3) ? x3 + xgap : x3 - xgap;
  y0 = (x0 > x3) ? y0 - ygap : y0 + ygap;
  y3 = (x0 > x3) ? y3 - ygap : y3 + ygap;

  const bool right = rule == TrafficRule::right;
  const bool py = right ? (y0 > y3) : (y0 < y3);
  const bool px = right ? (x0 > x3) : (x0 < x3);
  const double arrowlen = (right || mode == PathMode::corrected) ? arrow.arrowlen : 2.5;

  c.p0 = {x0, y0};
  c.p3 = {x3, y3};
  c.p1 = {py ? x0 + xdelta / 2 : x0 - xdelta / 2, px ? y0 - ydelta / 2 : y0 + ydelta / 2};
  c.p2 = {py ? x3 + xdelta + arrowlen * ydelta * sign : x3 - xdelta - arrowlen * ydelta * sign,
          px ? y3 - ydelta + arrowlen * xdelta * sign : y3 + ydelta - arrowlen * xdelta * sign};
  c.ep3 = {py ? x3 + xarrowdelta + arrowlen * ydelta * sign : x3 - xarrowdelta - arrowlen * ydelta * sign,
           px ? y3 - yarrowdelta + arrowlen * xdelta * sign : y3 + yarrowdelta - arrowlen * xdelta * sign};

  // Control points a third of the way along, bowed by the arc offset; the
  // outer curve bows one half-width further than the inner one.
  double arcx = xdelta * len / 4 / flow_width;
  double arcy = ydelta * len / 4 / flow_width;
  const double third_x = x0 + (x3 - x0) / 3;
  const double third_y = y0 + (y3 - y0) / 3;
  c.cp2_c2 = {py ? x0 + arcx : x0 - arcx, px ? y0 - arcy : y0 + arcy};
  c.cp1_c2 = {py ? third_x + arcx : third_x - arcx, px ? third_y - arcy : third_y + arcy};
  arcx = arcx + xdelta;
  arcy = arcy + ydelta;
  c.cp1_c1 = {py ? x0 + arcx : x0 - arcx, px ? y0 - arcy : y0 + arcy};
  c.cp2_c1 = {py ? third_x + arcx : third_x - arcx, px ? third_y - arcy : third_y + arcy};

  const double back_x = x3 + (x0 - x3) / 3;
  const double back_y = y3 + (y0 - y3) / 3;
  c.taper_cp2 = {py ? back_x + arcx : back_x - arcx, px ? back_y - arcy : back_y + arcy};
  return c;
}

inline PathSpec to_spec(FlowStyle style, const HalfArrowConstruction& c) {
  PathSpec s;
  s.style = style;
  s.p0 = c.p0;
  s.p1 = c.p1;
  s.p2 = c.p2;
  s.p3 = c.p3;
  s.ep3 = c.ep3;
  s.cp1_c1 = c.cp1_c1;
  s.cp2_c1 = c.cp2_c1;
  s.cp1_c2 = c.cp1_c2;
  s.cp2_c2 = c.cp2_c2;
  s.taper_cp2 = c.taper_cp2;
  s.clip0 = c.clip0;
  s.clip3 = c.clip3;
  s.center_distance = c.len;
  return s;
}

}  // namespace detail

/// Builds the closed outline of one flow symbol between two node circles.
/// Returns nothing when the centers are closer than 1.2 times the summed
/// radii.
///
/// curve_half_arrow emits M P0, L P1, C(CP1_C1, CP2_C1) P2, L EP3, L P3,
/// C(CP1_C2, CP2_C2) P0. straight_half_arrow replaces both cubics with
/// straight segments. tapered drops P2 and EP3 and curves from P1 straight
/// into P3. teardrop runs the tapered construction from the destination
/// back to the origin (with the traffic rule mirrored so it bows to the same
/// side) and drops the offset point, leaving the round end at the
/// destination.
inline std::optional<PathSpec> flow_path(FlowStyle style, Vec2 origin_center, Vec2 dest_center, double flow_width,
                                         double source_radius, double target_radius,
                                         TrafficRule rule = TrafficRule::right, PathMode mode = PathMode::fidelity) {
  if (!(flow_width > 0.0) || source_radius < 0.0 || target_radius < 0.0) return std::nullopt;

  if (style == FlowStyle::teardrop) {
    const auto flipped = rule == TrafficRule::right ? TrafficRule::left : TrafficRule::right;
    const auto c = detail::construct_half_arrow(dest_center, origin_center, flow_width, target_radius,
                                                source_radius, flipped, mode);
    if (!c) return std::nullopt;
    auto s = detail::to_spec(style, *c);
    s.commands = {{'M', {c->p0}},
                  {'C', {c->cp1_c1, c->taper_cp2, c->p3}},
                  {'C', {c->cp1_c2, c->cp2_c2, c->p0}},
                  {'Z', {}}};
    return s;
  }

  const auto c = detail::construct_half_arrow(origin_center, dest_center, flow_width, source_radius,
                                              target_radius, rule, mode);
  if (!c) return std::nullopt;
  auto s = detail::to_spec(style, *c);
  switch (style) {
    case FlowStyle::curve_half_arrow:
      s.commands = {{'M', {c->p0}},
                    {'L', {c->p1}},
                    {'C', {c->cp1_c1, c->cp2_c1, c->p2}},
                    {'L', {c->ep3}},
                    {'L', {c->p3}},
                    {'C', {c->cp1_c2, c->cp2_c2, c->p0}}};
      break;
    case FlowStyle::straight_half_arrow:
      s.commands = {{'M', {c->p0}}, {'L', {c->p1}}, {'L', {c->p2}}, {'L', {c->ep3}}, {'L', {c->p3}}, {'Z', {}}};
      break;
    case FlowStyle::tapered:
      s.commands = {{'M', {c->p0}},
                    {'L', {c->p1}},
                    {'C', {c->cp1_c1, c->taper_cp2, c->p3}},
                    {'C', {c->cp1_c2, c->cp2_c2, c->p0}},
                    {'Z', {}}};
      break;
    case FlowStyle::teardrop:
      break;
  }
  return s;
}

/// SVG path data in the order "M x,y L x,y C x,y x,y x,y ...", numbers
/// rounded half away from zero to `decimals` places.
inline std::string path_data(const std::vector<PathCommand>& commands, int decimals) {
  std::string out;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const auto& cmd = commands[i];
    if (i) out.push_back(' ');
    out.push_back(cmd.op);
    for (std::size_t k = 0; k < cmd.points.size(); ++k) {
      if (k) out.push_back(' ');
      out += format_fixed(cmd.points[k].x, decimals);
      out.push_back(',');
      out += format_fixed(cmd.points[k].y, decimals);
    }
  }
  return out;
}

}  // namespace odflow
