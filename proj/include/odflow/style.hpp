#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odflow/classify.hpp"
#include "odflow/error.hpp"
#include "odflow/flow_path.hpp"

namespace odflow {

/// How magnitudes map to line width (flows) or radius (nodes).
struct ScalingSpec {
  enum class Kind { proportional, classified };
  Kind kind = Kind::proportional;
  ClassMethod method = ClassMethod::quantile;
  int k = 5;
  std::vector<double> breaks;  // manual method only

  bool operator==(const ScalingSpec&) const = default;
};

struct ColorSpec {
  enum class Mode { single, continuous, classified };
  Mode mode = Mode::single;
  Rgb color{0, 0, 0};        // single
  Rgb from{255, 255, 255};   // continuous
  Rgb to{0, 0, 255};
  std::string scheme = "Blues";  // classified
  int k = 5;
  ClassMethod method = ClassMethod::quantile;
  std::vector<double> breaks;

  bool operator==(const ColorSpec&) const = default;
};

struct StrokeSpec {
  Rgb color{255, 255, 255};
  double width = 0.5;
  bool operator==(const StrokeSpec&) const = default;
};

struct LegendSpec {
  bool visible = true;
  std::string title;
  int decimals = 0;
  bool operator==(const LegendSpec&) const = default;
};

/// Symbology of one layer. Flow-only fields (style, traffic rule, path mode,
/// top_n) are ignored on the region and node layers; for nodes the width
/// range is the circle radius range.
struct LayerStyle {
  bool visible = true;
  std::string value_field;
  FlowStyle flow_style = FlowStyle::curve_half_arrow;
  TrafficRule traffic_rule = TrafficRule::right;
  PathMode path_mode = PathMode::fidelity;
  ScalingSpec scaling;
  double width_min = 1.0;
  double width_max = 12.0;
  ColorSpec color;
  StrokeSpec stroke;
  double opacity = 1.0;
  std::optional<std::size_t> top_n;
  LegendSpec legend;

  bool operator==(const LayerStyle&) const = default;
};

inline void validate(const LayerStyle& s, std::string_view layer) {
  const std::string where = "layer '" + std::string(layer) + "': ";
  if (!(s.width_min < s.width_max)) {
    throw Error(ErrorCode::invalid_project, where + "width range min must be below max");
  }
  if (!(s.width_min >= 0.0)) throw Error(ErrorCode::invalid_project, where + "width range must be non-negative");
  auto check_k = [&](int k, std::span<const double> breaks, bool manual) {
    if (k < kMinClasses || k > kMaxClasses) {
      throw Error(ErrorCode::invalid_project, where + "class count must be in [2, 9]");
    }
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      if (!(breaks[i] > breaks[i - 1])) {
        throw Error(ErrorCode::invalid_project, where + "manual breaks must be strictly increasing");
      }
    }
    if (manual && breaks.size() != static_cast<std::size_t>(k - 1)) {
      throw Error(ErrorCode::invalid_project, where + "manual classification needs k - 1 breaks");
    }
  };
  if (s.scaling.kind == ScalingSpec::Kind::classified) {
    check_k(s.scaling.k, s.scaling.breaks, s.scaling.method == ClassMethod::manual);
  }
  if (s.color.mode == ColorSpec::Mode::classified) {
    check_k(s.color.k, s.color.breaks, s.color.method == ClassMethod::manual);
    if (!scheme_colors(s.color.scheme, s.color.k)) {
      throw Error(ErrorCode::invalid_project, where + "unknown color scheme '" + s.color.scheme + "'");
    }
  }
  if (!(s.opacity >= 0.0 && s.opacity <= 1.0)) {
    throw Error(ErrorCode::invalid_project, where + "opacity must be in [0, 1]");
  }
  if (!(s.stroke.width >= 0.0)) throw Error(ErrorCode::invalid_project, where + "stroke width must be >= 0");
  if (s.top_n && *s.top_n == 0) throw Error(ErrorCode::invalid_project, where + "top_n must be positive");
  if (s.legend.decimals < 0 || s.legend.decimals > 12) {
    throw Error(ErrorCode::invalid_project, where + "legend decimals must be in [0, 12]");
  }
}

inline ClassificationResult classify_for(std::span<const double> values, const ScalingSpec& s) {
  return classify(values, s.method, s.k, s.breaks);
}

inline ClassificationResult classify_for(std::span<const double> values, const ColorSpec& c) {
  return classify(values, c.method, c.k, c.breaks);
}

/// Legend anchors for a scaling: (min, mean, max) when proportional, one
/// labelled range per class when classified.
inline std::vector<LegendAnchor> legend_values(std::span<const double> values, const ScalingSpec& scaling,
                                               int decimals) {
  if (values.empty()) throw Error(ErrorCode::empty_dataset, "legend needs at least one value");
  if (scaling.kind == ScalingSpec::Kind::proportional) return proportional_legend_values(values, decimals);
  return classified_legend_values(classify_for(values, scaling), decimals);
}

}  // namespace odflow
