#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odflow/analytics.hpp"
#include "odflow/classify.hpp"
#include "odflow/flow_path.hpp"
#include "odflow/numeric.hpp"
#include "odflow/project.hpp"
#include "odflow/projection.hpp"
#include "odflow/style.hpp"

namespace odflow {

// ---------------------------------------------------------------------------
// Scene model

struct SvgAttr {
  std::string name;
  std::variant<std::string, double> value;
  bool coordinate = false;  // rounded to the output precision
};

struct SceneElement {
  std::string tag;
  std::vector<SvgAttr> attrs;
  std::vector<PathCommand> path;  // serialized as the "d" attribute
  std::string text;
  std::vector<SceneElement> children;

  SceneElement() = default;
  explicit SceneElement(std::string t) : tag(std::move(t)) {}

  SceneElement& set(std::string name, std::string value) {
    attrs.push_back({std::move(name), std::move(value), false});
    return *this;
  }
  SceneElement& coord(std::string name, double value) {
    attrs.push_back({std::move(name), value, true});
    return *this;
  }
  SceneElement& number(std::string name, double value) {
    attrs.push_back({std::move(name), value, false});
    return *this;
  }

  const SvgAttr* find(std::string_view name) const {
    for (const auto& a : attrs) {
      if (a.name == name) return &a;
    }
    return nullptr;
  }
};

struct SceneLayer {
  std::string id;
  std::vector<SceneElement> elements;
};

/// Composed map. Layers are always, in order: background, regions, flows,
/// nodes, legends, map-elements.
struct SceneDocument {
  double width = 0.0;
  double height = 0.0;
  std::vector<SceneLayer> layers;

  SceneLayer& layer(std::string_view id) {
    for (auto& l : layers) {
      if (l.id == id) return l;
    }
    throw Error(ErrorCode::invalid_argument, "no scene layer '" + std::string(id) + "'");
  }
  const SceneLayer& layer(std::string_view id) const { return const_cast<SceneDocument*>(this)->layer(id); }
};

inline constexpr std::string_view kLayerOrder[] = {"background", "regions", "flows",
                                                   "nodes",      "legends", "map-elements"};

inline SceneDocument empty_scene(double width, double height, Rgb background, double background_opacity = 1.0) {
  SceneDocument doc;
  doc.width = width;
  doc.height = height;
  for (auto id : kLayerOrder) doc.layers.push_back({std::string(id), {}});
  SceneElement rect("rect");
  rect.set("class", "background").coord("x", 0).coord("y", 0).coord("width", width).coord("height", height);
  rect.set("fill", background.hex()).number("fill-opacity", background_opacity);
  doc.layers.front().elements.push_back(std::move(rect));
  return doc;
}

// ---------------------------------------------------------------------------
// View transform

/// Projects lon/lat and fits the projected bounding box into the canvas with
/// a uniform scale, centered, with 5% padding on each side. Screen y grows
/// downward.
class ViewTransform {
 public:
  // Mercator latitudes are clamped here so polar vertices stay finite.
  static constexpr double kMercatorLimit = 85.0511287798066;

  ViewTransform(ProjectionSpec spec, double width, double height) : spec_(spec), width_(width), height_(height) {}

  MapPoint project(double lon, double lat) const {
    if (spec_.kind == ProjectionKind::mercator) lat = std::clamp(lat, -kMercatorLimit, kMercatorLimit);
    return project_point(spec_, lon, lat);
  }

  void include(MapPoint p) {
    min_x_ = std::min(min_x_, p.x);
    max_x_ = std::max(max_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_y_ = std::max(max_y_, p.y);
  }

  void fit(double padding = 0.05) {
    if (!(max_x_ >= min_x_)) {
      min_x_ = max_x_ = min_y_ = max_y_ = 0.0;
    }
    const double bw = max_x_ - min_x_;
    const double bh = max_y_ - min_y_;
    const double avail_w = width_ * (1.0 - 2.0 * padding);
    const double avail_h = height_ * (1.0 - 2.0 * padding);
    if (bw > 0.0 && bh > 0.0) scale_ = std::min(avail_w / bw, avail_h / bh);
    else if (bw > 0.0) scale_ = avail_w / bw;
    else if (bh > 0.0) scale_ = avail_h / bh;
    else scale_ = 1.0;
    mid_x_ = (min_x_ + max_x_) / 2.0;
    mid_y_ = (min_y_ + max_y_) / 2.0;
  }

  Vec2 to_screen(MapPoint p) const {
    return {width_ / 2.0 + (p.x - mid_x_) * scale_, height_ / 2.0 - (p.y - mid_y_) * scale_};
  }
  Vec2 lonlat_to_screen(double lon, double lat) const { return to_screen(project(lon, lat)); }
  double scale() const { return scale_; }

 private:
  ProjectionSpec spec_;
  double width_, height_;
  double min_x_ = std::numeric_limits<double>::infinity();
  double max_x_ = -std::numeric_limits<double>::infinity();
  double min_y_ = std::numeric_limits<double>::infinity();
  double max_y_ = -std::numeric_limits<double>::infinity();
  double scale_ = 1.0, mid_x_ = 0.0, mid_y_ = 0.0;
};

// ---------------------------------------------------------------------------
// Legends

enum class LegendKind { proportional, classified };
enum class LegendGlyph { flow, circle, box };

struct LegendEntry {
  LegendAnchor anchor;
  double size = 0.0;  // line width, circle radius, or unused for boxes
  Rgb color{};
};

struct LegendGlyphStyle {
  std::string layer;  // regions | nodes | flows
  std::string title;
  LegendGlyph glyph = LegendGlyph::box;
  Rgb stroke{0, 0, 0};
  double stroke_width = 0.0;
  double opacity = 1.0;
  FlowStyle flow_style = FlowStyle::curve_half_arrow;
  TrafficRule traffic_rule = TrafficRule::right;
  PathMode path_mode = PathMode::fidelity;
};

struct LegendGroup {
  SceneElement group;
  double width = 0.0;
  double height = 0.0;
};

/// One legend block with its origin at the top-left corner. Proportional
/// legends show min / mean / max samples, classified ones a row per class.
inline LegendGroup build_legend(LegendKind kind, const std::vector<LegendEntry>& entries, const LegendGlyphStyle& st) {
  constexpr double kTitleHeight = 18.0;
  constexpr double kGlyphWidth = 56.0;
  constexpr double kGap = 8.0;
  LegendGroup out;
  out.group = SceneElement("g");
  out.group.set("class", "legend").set("data-layer", st.layer).set("data-kind",
                                                                   kind == LegendKind::proportional ? "proportional" : "classified");
  double y = 0.0;
  if (!st.title.empty()) {
    SceneElement title("text");
    title.set("class", "legend-title").coord("x", 0).coord("y", 12).number("font-size", 12).set("font-weight", "bold");
    title.text = st.title;
    out.group.children.push_back(std::move(title));
    y = kTitleHeight;
  }

  double max_size = 0.0;
  for (const auto& e : entries) max_size = std::max(max_size, e.size);
  double glyph_w = kGlyphWidth;
  if (st.glyph == LegendGlyph::circle) glyph_w = 2.0 * max_size;
  if (st.glyph == LegendGlyph::box) glyph_w = 18.0;

  for (const auto& e : entries) {
    double row_h = 18.0;
    if (st.glyph == LegendGlyph::circle) row_h = std::max(row_h, 2.0 * e.size + 4.0);
    if (st.glyph == LegendGlyph::flow) row_h = std::max(row_h, 2.5 * e.size + 4.0);
    const double mid = y + row_h / 2.0;

    SceneElement glyph;
    switch (st.glyph) {
      case LegendGlyph::flow: {
        auto path = flow_path(st.flow_style, {0.0, mid}, {kGlyphWidth, mid}, std::max(e.size, 1e-6), 0.0, 0.0,
                              st.traffic_rule, st.path_mode);
        glyph = SceneElement("path");
        if (path) glyph.path = path->commands;
        break;
      }
      case LegendGlyph::circle:
        glyph = SceneElement("circle");
        glyph.coord("cx", max_size).coord("cy", mid).coord("r", e.size);
        break;
      case LegendGlyph::box:
        glyph = SceneElement("rect");
        glyph.coord("x", 0).coord("y", mid - 6.0).coord("width", 18).coord("height", 12);
        break;
    }
    glyph.set("class", "legend-glyph").set("fill", e.color.hex()).set("stroke", st.stroke.hex());
    glyph.number("stroke-width", st.stroke_width).number("opacity", st.opacity);
    out.group.children.push_back(std::move(glyph));

    SceneElement label("text");
    label.set("class", "legend-label").coord("x", glyph_w + kGap).coord("y", mid + 4.0).number("font-size", 11);
    label.text = e.anchor.label;
    out.group.children.push_back(std::move(label));
    y += row_h;
  }
  out.height = y;
  out.width = glyph_w + kGap + 80.0;
  return out;
}

// ---------------------------------------------------------------------------
// Composition

namespace detail {

inline constexpr Rgb kNoDataColor{204, 204, 204};

/// Classifies the drawn values, lowering k while the set has too few distinct
/// values for it (a top-n filter can leave only a handful). Nothing when even
/// two classes are impossible.
inline std::optional<ClassificationResult> classify_drawn(std::span<const double> values, ClassMethod method, int k,
                                                          const std::vector<double>& breaks) {
  for (int kk = k; kk >= 2; --kk) {
    try {
      return classify(values, method, kk, breaks);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::too_few_distinct_values || method == ClassMethod::manual) throw;
    }
  }
  return std::nullopt;
}

/// Resolves per-value color for a layer over the layer's value set.
class ColorMapper {
 public:
  ColorMapper(const ColorSpec& spec, std::span<const double> values) : spec_(spec) {
    if (!values.empty()) {
      const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
      vmin_ = *mn;
      vmax_ = *mx;
    }
    if (spec.mode == ColorSpec::Mode::classified) {
      if (!values.empty()) classes_ = classify_drawn(values, spec.method, spec.k, spec.breaks);
      scheme_ = *scheme_colors(spec.scheme, classes_ ? classes_->k : spec.k);
    }
  }

  Rgb operator()(double v) const {
    switch (spec_.mode) {
      case ColorSpec::Mode::single: return spec_.color;
      case ColorSpec::Mode::continuous:
        return interpolate_color(v, vmin_, vmax_, ColorRamp{ColorRamp::Mode::continuous, spec_.from, spec_.to, {}});
      case ColorSpec::Mode::classified:
        if (classes_) return scheme_[static_cast<std::size_t>(classes_->assign(v))];
        return scheme_.empty() ? kNoDataColor : scheme_.back();
    }
    return spec_.color;
  }

  const std::optional<ClassificationResult>& classes() const { return classes_; }
  const std::vector<Rgb>& scheme() const { return scheme_; }
  double vmin() const { return vmin_; }
  double vmax() const { return vmax_; }

 private:
  ColorSpec spec_;
  double vmin_ = 0.0, vmax_ = 0.0;
  std::vector<Rgb> scheme_;
  std::optional<ClassificationResult> classes_;
};

/// Resolves per-value width (or radius) for a layer over its value set.
class SizeMapper {
 public:
  SizeMapper(const LayerStyle& style, std::span<const double> values) : style_(style) {
    if (!values.empty()) {
      const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
      vmin_ = *mn;
      vmax_ = *mx;
      if (style.scaling.kind == ScalingSpec::Kind::classified) {
        classes_ = classify_drawn(values, style.scaling.method, style.scaling.k, style.scaling.breaks);
      }
    }
  }

  double operator()(double v) const {
    if (style_.scaling.kind == ScalingSpec::Kind::classified && classes_) {
      return class_width(classes_->assign(v), classes_->k, style_.width_min, style_.width_max);
    }
    return proportional_width(v, vmin_, vmax_, style_.width_min, style_.width_max);
  }

  const std::optional<ClassificationResult>& classes() const { return classes_; }

 private:
  LayerStyle style_;
  double vmin_ = 0.0, vmax_ = 0.0;
  std::optional<ClassificationResult> classes_;
};

inline std::vector<LegendEntry> legend_entries(const LayerStyle& style, std::span<const double> values,
                                               const SizeMapper& size, const ColorMapper& color, bool color_driven) {
  std::vector<LegendEntry> entries;
  if (values.empty()) return entries;
  const int dec = style.legend.decimals;
  std::optional<ClassificationResult> cls;
  if (color_driven) {
    if (color.classes()) cls = color.classes();
  } else if (size.classes()) {
    cls = size.classes();
  } else if (color.classes()) {
    cls = color.classes();
  }
  if (cls) {
    for (auto& a : classified_legend_values(*cls, dec)) {
      const double probe = a.upper;
      entries.push_back({a, size(probe), color(probe)});
    }
  } else {
    for (auto& a : proportional_legend_values(values, dec)) entries.push_back({a, size(a.value), color(a.value)});
  }
  return entries;
}

inline SceneElement polygon_path(const RegionFeature& f, const ViewTransform& view) {
  SceneElement el("path");
  for (const auto& poly : f.polygons) {
    for (const auto& ring : poly.rings) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto s = view.lonlat_to_screen(ring[i].lon, ring[i].lat);
        el.path.push_back({i == 0 ? 'M' : 'L', {s}});
      }
      el.path.push_back({'Z', {}});
    }
  }
  return el;
}

// Rank order shared by top-n filtering and flow draw order.
inline std::vector<std::size_t> ranked_indices(const std::vector<FlowRecord>& flows,
                                               const std::vector<std::size_t>& candidates) {
  std::vector<std::size_t> order = candidates;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = flows[a];
    const auto& y = flows[b];
    if (x.value != y.value) return x.value > y.value;
    if (x.origin_id != y.origin_id) return x.origin_id < y.origin_id;
    return x.dest_id < y.dest_id;
  });
  return order;
}

inline SceneElement north_arrow(Corner corner, double width, double height) {
  const double size = 28.0;
  const double margin = 24.0;
  const bool right = corner == Corner::top_right || corner == Corner::bottom_right;
  const bool bottom = corner == Corner::bottom_left || corner == Corner::bottom_right;
  const double cx = right ? width - margin - size / 2.0 : margin + size / 2.0;
  const double top = bottom ? height - margin - size - 14.0 : margin;
  SceneElement g("g");
  g.set("class", "north-arrow");
  SceneElement arrow("path");
  arrow.path = {{'M', {{cx, top + 14.0}}},
                {'L', {{cx + size / 3.0, top + 14.0 + size}}},
                {'L', {{cx, top + 14.0 + size * 0.7}}},
                {'L', {{cx - size / 3.0, top + 14.0 + size}}},
                {'Z', {}}};
  arrow.set("fill", "#222222").set("stroke", "none");
  SceneElement n("text");
  n.coord("x", cx).coord("y", top + 10.0).set("text-anchor", "middle").number("font-size", 12).set("font-weight", "bold");
  n.text = "N";
  g.children.push_back(std::move(arrow));
  g.children.push_back(std::move(n));
  return g;
}

}  // namespace detail

/// Top-n by value with ties on (origin, dest); output in rank order.
inline std::vector<std::size_t> top_n_indices(const std::vector<FlowRecord>& flows, std::size_t n) {
  std::vector<std::size_t> all(flows.size());
  for (std::size_t i = 0; i < flows.size(); ++i) all[i] = i;
  auto ranked = detail::ranked_indices(flows, all);
  if (n < ranked.size()) ranked.resize(n);
  return ranked;
}

/// Lays out the full map for a project. With a selection, flows that do not
/// touch the selected node are drawn at dim_factor times their opacity.
inline SceneDocument compose(const ProjectFile& project, std::optional<std::string_view> selection = std::nullopt) {
  const auto resolved = resolve_project(project);
  const auto& net = resolved.network;
  const auto& map = project.map;
  if (selection && !net.index_of(*selection)) {
    throw Error(ErrorCode::invalid_argument, "selected node '" + std::string(*selection) + "' does not exist");
  }

  auto doc = empty_scene(map.width, map.height, map.background, map.background_opacity);
  ViewTransform view(map.projection, map.width, map.height);
  const bool draw_regions = project.regions.visible && !resolved.regions.empty();
  if (draw_regions) {
    for (const auto& f : resolved.regions) {
      for (const auto& poly : f.polygons) {
        for (const auto& ring : poly.rings) {
          for (const auto& p : ring) view.include(view.project(p.lon, p.lat));
        }
      }
    }
  }
  for (const auto& n : net.nodes()) view.include(view.project(n.lon, n.lat));
  view.fit();

  std::vector<LegendGroup> legends;

  // Regions: choropleth of the joined attribute.
  if (draw_regions) {
    const auto& st = project.regions;
    std::vector<double> values;
    for (const auto& f : resolved.regions) {
      if (auto v = f.attributes.number(st.value_field)) values.push_back(*v);
    }
    const detail::ColorMapper color(st.color, values);
    const detail::SizeMapper size(st, {});
    auto& layer = doc.layer("regions");
    for (const auto& f : resolved.regions) {
      auto el = detail::polygon_path(f, view);
      const auto v = f.attributes.number(st.value_field);
      const Rgb fill = v ? color(*v) : detail::kNoDataColor;
      el.set("class", "region").set("data-id", f.id).set("fill", fill.hex()).set("fill-rule", "evenodd");
      el.set("stroke", st.stroke.color.hex()).number("stroke-width", st.stroke.width).number("opacity", st.opacity);
      layer.elements.push_back(std::move(el));
    }
    if (st.legend.visible && !values.empty()) {
      LegendGlyphStyle gs{"regions", st.legend.title, LegendGlyph::box, st.stroke.color, st.stroke.width, st.opacity};
      const auto kind = color.classes() ? LegendKind::classified : LegendKind::proportional;
      legends.push_back(build_legend(kind, detail::legend_entries(st, values, size, color, true), gs));
    }
  }

  // Nodes: graduated circles.
  const auto& nst = project.nodes;
  const bool draw_nodes = nst.visible && !(nst.stroke.width == 0.0 && nst.opacity == 0.0);
  std::vector<double> node_values(net.nodes().size());
  for (std::size_t i = 0; i < net.nodes().size(); ++i) {
    if (nst.value_field.empty()) {
      node_values[i] = net.in_strength(i) + net.out_strength(i);
    } else {
      node_values[i] = net.nodes()[i].attributes.number(nst.value_field).value_or(std::numeric_limits<double>::quiet_NaN());
    }
  }
  std::vector<double> finite_node_values;
  for (double v : node_values) {
    if (std::isfinite(v)) finite_node_values.push_back(v);
  }
  std::vector<double> radius(net.nodes().size(), 0.0);
  if (draw_nodes) {
    const detail::SizeMapper size(nst, finite_node_values);
    const detail::ColorMapper color(nst.color, finite_node_values);
    auto& layer = doc.layer("nodes");
    for (std::size_t i = 0; i < net.nodes().size(); ++i) {
      const auto& n = net.nodes()[i];
      const double v = node_values[i];
      radius[i] = std::isfinite(v) ? size(v) : nst.width_min;
      const auto s = view.lonlat_to_screen(n.lon, n.lat);
      SceneElement c("circle");
      c.set("class", "node").set("data-id", n.id).coord("cx", s.x).coord("cy", s.y).coord("r", radius[i]);
      c.set("fill", (std::isfinite(v) ? color(v) : detail::kNoDataColor).hex());
      c.set("stroke", nst.stroke.color.hex()).number("stroke-width", nst.stroke.width).number("opacity", nst.opacity);
      layer.elements.push_back(std::move(c));
    }
    if (nst.legend.visible && !finite_node_values.empty()) {
      LegendGlyphStyle gs{"nodes", nst.legend.title, LegendGlyph::circle, nst.stroke.color, nst.stroke.width, nst.opacity};
      const auto kind = (size.classes() || color.classes()) ? LegendKind::classified : LegendKind::proportional;
      legends.push_back(build_legend(kind, detail::legend_entries(nst, finite_node_values, size, color, false), gs));
    }
  }

  // Flows.
  const auto& fst = project.flows;
  if (fst.visible) {
    const auto& flows = net.flows();
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < flows.size(); ++i) {
      if (!flows[i].is_self_flow()) candidates.push_back(i);
    }
    auto order = detail::ranked_indices(flows, candidates);
    if (fst.top_n && *fst.top_n < order.size()) order.resize(*fst.top_n);

    std::vector<double> values;
    for (auto i : order) values.push_back(flows[i].value);
    const detail::SizeMapper size(fst, values);
    const detail::ColorMapper color(fst.color, values);
    auto& layer = doc.layer("flows");
    for (auto i : order) {
      const auto& f = flows[i];
      const auto o = net.origin_index(i);
      const auto d = net.dest_index(i);
      const auto so = view.lonlat_to_screen(net.nodes()[o].lon, net.nodes()[o].lat);
      const auto sd = view.lonlat_to_screen(net.nodes()[d].lon, net.nodes()[d].lat);
      const double w = size(f.value);
      auto path = flow_path(fst.flow_style, so, sd, w, radius[o], radius[d], fst.traffic_rule, fst.path_mode);
      if (!path) continue;
      const bool incident = !selection || f.origin_id == *selection || f.dest_id == *selection;
      SceneElement el("path");
      el.path = path->commands;
      el.set("class", "flow").set("data-origin", f.origin_id).set("data-dest", f.dest_id).set("data-id", std::to_string(i));
      el.set("fill", color(f.value).hex()).set("stroke", fst.stroke.color.hex()).number("stroke-width", fst.stroke.width);
      el.number("opacity", incident ? fst.opacity : map.dim_factor * fst.opacity);
      layer.elements.push_back(std::move(el));
    }
    if (fst.legend.visible && !values.empty()) {
      LegendGlyphStyle gs{"flows", fst.legend.title, LegendGlyph::flow, fst.stroke.color, fst.stroke.width,
                          fst.opacity, fst.flow_style, fst.traffic_rule, fst.path_mode};
      const auto kind = (size.classes() || color.classes()) ? LegendKind::classified : LegendKind::proportional;
      legends.push_back(build_legend(kind, detail::legend_entries(fst, values, size, color, false), gs));
    }
  }

  // Legends stack upward from the lower-left corner.
  {
    auto& layer = doc.layer("legends");
    double bottom = map.height - map.legend_offset.y;
    for (auto& lg : legends) {
      const double top = bottom - lg.height;
      lg.group.set("transform", "translate(" + format_fixed(map.legend_offset.x, map.decimals) + "," +
                                    format_fixed(top, map.decimals) + ")");
      layer.elements.push_back(std::move(lg.group));
      bottom = top - 12.0;
    }
  }

  // Map elements.
  {
    auto& layer = doc.layer("map-elements");
    if (!map.title.empty()) {
      SceneElement t("text");
      t.set("class", "map-title").coord("x", map.width / 2.0).coord("y", 30).set("text-anchor", "middle");
      t.number("font-size", 20);
      t.text = map.title;
      layer.elements.push_back(std::move(t));
    }
    if (map.north_arrow) layer.elements.push_back(detail::north_arrow(map.north_arrow_corner, map.width, map.height));
    if (map.projection_label) {
      SceneElement t("text");
      t.set("class", "projection-label").coord("x", map.width - 10.0).coord("y", map.height - 10.0);
      t.set("text-anchor", "end").number("font-size", 10);
      t.text = map.projection.display_name();
      layer.elements.push_back(std::move(t));
    }
    for (const auto& l : map.labels) {
      const auto s = view.lonlat_to_screen(l.lon, l.lat);
      SceneElement t("text");
      t.set("class", "custom-label").coord("x", s.x).coord("y", s.y).set("text-anchor", "middle").number("font-size", 11);
      t.text = l.text;
      layer.elements.push_back(std::move(t));
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// SVG

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace detail {

inline void write_element(std::string& out, const SceneElement& el, int decimals, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '<';
  out += el.tag;
  if (!el.path.empty()) {
    out += " d=\"";
    out += xml_escape(path_data(el.path, decimals));
    out += '"';
  }
  for (const auto& a : el.attrs) {
    out += ' ';
    out += a.name;
    out += "=\"";
    if (const auto* s = std::get_if<std::string>(&a.value)) {
      out += xml_escape(*s);
    } else {
      const double v = std::get<double>(a.value);
      out += a.coordinate ? format_fixed(v, decimals) : format_shortest(v);
    }
    out += '"';
  }
  if (el.children.empty() && el.text.empty()) {
    out += "/>\n";
    return;
  }
  out += '>';
  if (!el.text.empty()) {
    out += xml_escape(el.text);
  }
  if (!el.children.empty()) {
    out += '\n';
    for (const auto& c : el.children) write_element(out, c, decimals, depth + 1);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
  }
  out += "</";
  out += el.tag;
  out += ">\n";
}

}  // namespace detail

/// Standalone SVG 1.1 text. Coordinates are rounded half away from zero to
/// `decimals` places; output depends only on the scene.
inline std::string to_svg(const SceneDocument& scene, int decimals = 3) {
  decimals = std::clamp(decimals, 1, 6);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + format_fixed(scene.width, decimals) +
         "\" height=\"" + format_fixed(scene.height, decimals) + "\" viewBox=\"0 0 " +
         format_fixed(scene.width, decimals) + " " + format_fixed(scene.height, decimals) +
         "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
  for (const auto& layer : scene.layers) {
    if (layer.elements.empty()) continue;
    out += "  <g id=\"" + xml_escape(layer.id) + "\">\n";
    for (const auto& el : layer.elements) detail::write_element(out, el, decimals, 2);
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

/// Shared render path for the CLI and the HTTP service.
inline std::string render_project(const ProjectFile& project, std::optional<std::string_view> selection = std::nullopt,
                                  std::optional<int> decimals = std::nullopt) {
  return to_svg(compose(project, selection), decimals.value_or(project.map.decimals));
}

}  // namespace odflow
