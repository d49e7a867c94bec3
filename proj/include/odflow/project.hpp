#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "odflow/core_model.hpp"
#include "odflow/error.hpp"
#include "odflow/ingest.hpp"
#include "odflow/projection.hpp"
#include "odflow/style.hpp"

namespace odflow {

inline constexpr std::string_view kProjectFormatVersion = "1";

struct Datasets {
  std::string nodes_csv;
  std::string flows_csv;
  std::optional<std::string> regions_geojson;
  std::optional<std::string> region_attributes_csv;

  bool operator==(const Datasets&) const = default;
};

struct JoinSpec {
  std::string region_id_property;   // property on each GeoJSON feature
  std::string attribute_id_column;  // key column of the region attribute CSV
  std::string node_id_column = "id";
  std::string node_x_column = "X";
  std::string node_y_column = "Y";
  std::string flow_origin_column = "origin";
  std::string flow_dest_column = "dest";
  std::string flow_value_column = "value";

  bool operator==(const JoinSpec&) const = default;
};

struct CustomLabel {
  std::string text;
  double lon = 0.0;
  double lat = 0.0;
  bool operator==(const CustomLabel&) const = default;
};

enum class Corner { top_left, top_right, bottom_left, bottom_right };

inline constexpr std::string_view to_string(Corner c) {
  switch (c) {
    case Corner::top_left: return "top_left";
    case Corner::top_right: return "top_right";
    case Corner::bottom_left: return "bottom_left";
    case Corner::bottom_right: return "bottom_right";
  }
  return "";
}

inline std::optional<Corner> parse_corner(std::string_view s) {
  for (auto c : {Corner::top_left, Corner::top_right, Corner::bottom_left, Corner::bottom_right}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

struct MapSettings {
  double width = 960.0;
  double height = 640.0;
  ProjectionSpec projection;
  Rgb background{255, 255, 255};
  double background_opacity = 1.0;
  std::string title;
  bool north_arrow = true;
  Corner north_arrow_corner = Corner::top_right;
  bool projection_label = true;
  std::vector<CustomLabel> labels;
  double dim_factor = 0.15;
  int decimals = 3;
  Vec2 legend_offset{16.0, 16.0};  // from the lower-left corner

  bool operator==(const MapSettings&) const = default;
};

/// Everything needed to reproduce a map: embedded data, joins, symbology
/// per layer and map settings.
struct ProjectFile {
  std::string version = std::string(kProjectFormatVersion);
  Datasets datasets;
  JoinSpec joins;
  LayerStyle regions;
  LayerStyle nodes;
  LayerStyle flows;
  MapSettings map;

  bool operator==(const ProjectFile&) const = default;
};

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using pjson = nlohmann::ordered_json;

inline std::string json_rgb(const Rgb& c) { return c.hex(); }

inline Rgb rgb_from(const pjson& j, std::string_view path) {
  if (!j.is_string()) throw Error(ErrorCode::invalid_project, std::string(path) + " must be a \"#rrggbb\" string");
  auto c = parse_hex_color(j.get<std::string>());
  if (!c) throw Error(ErrorCode::invalid_project, std::string(path) + " is not a \"#rrggbb\" color");
  return *c;
}

template <typename T>
T get_or(const pjson& obj, const char* key, T fallback, std::string_view path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::invalid_project, std::string(path) + "." + key + " has the wrong type");
  }
}

inline const pjson& require(const pjson& obj, const char* key, std::string_view path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::invalid_project, std::string(path) + "." + key + " is required");
  return *it;
}

inline std::vector<double> breaks_from(const pjson& obj, std::string_view path) {
  auto it = obj.find("breaks");
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_array()) throw Error(ErrorCode::invalid_project, std::string(path) + ".breaks must be an array");
  std::vector<double> out;
  for (const auto& b : *it) {
    if (!b.is_number()) throw Error(ErrorCode::invalid_project, std::string(path) + ".breaks must hold numbers");
    out.push_back(b.get<double>());
  }
  return out;
}

inline ClassMethod method_from(const pjson& obj, std::string_view path) {
  const auto name = get_or<std::string>(obj, "method", "quantile", path);
  auto m = parse_class_method(name);
  if (!m) throw Error(ErrorCode::invalid_project, std::string(path) + ".method '" + name + "' is unknown");
  return *m;
}

inline pjson to_json(const LayerStyle& s) {
  pjson j;
  j["visible"] = s.visible;
  j["value_field"] = s.value_field;
  j["flow_style"] = std::string(to_string(s.flow_style));
  j["traffic_rule"] = std::string(to_string(s.traffic_rule));
  j["path_mode"] = std::string(to_string(s.path_mode));
  pjson sc;
  if (s.scaling.kind == ScalingSpec::Kind::proportional) {
    sc["kind"] = "proportional";
  } else {
    sc["kind"] = "classified";
    sc["method"] = std::string(to_string(s.scaling.method));
    sc["k"] = s.scaling.k;
    sc["breaks"] = s.scaling.breaks;
  }
  j["scaling"] = sc;
  j["width_range"] = {s.width_min, s.width_max};
  pjson c;
  switch (s.color.mode) {
    case ColorSpec::Mode::single:
      c["mode"] = "single";
      c["color"] = json_rgb(s.color.color);
      break;
    case ColorSpec::Mode::continuous:
      c["mode"] = "continuous";
      c["from"] = json_rgb(s.color.from);
      c["to"] = json_rgb(s.color.to);
      break;
    case ColorSpec::Mode::classified:
      c["mode"] = "classified";
      c["scheme"] = s.color.scheme;
      c["k"] = s.color.k;
      c["method"] = std::string(to_string(s.color.method));
      c["breaks"] = s.color.breaks;
      break;
  }
  j["color"] = c;
  j["stroke"] = {{"color", json_rgb(s.stroke.color)}, {"width", s.stroke.width}};
  j["opacity"] = s.opacity;
  j["top_n"] = s.top_n ? pjson(*s.top_n) : pjson(nullptr);
  j["legend"] = {{"visible", s.legend.visible}, {"title", s.legend.title}, {"decimals", s.legend.decimals}};
  return j;
}

inline LayerStyle layer_from(const pjson& j, std::string_view path) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_project, std::string(path) + " must be an object");
  LayerStyle s;
  s.visible = get_or<bool>(j, "visible", true, path);
  s.value_field = get_or<std::string>(j, "value_field", "", path);

  const auto style = get_or<std::string>(j, "flow_style", "curve_half_arrow", path);
  auto fs = parse_flow_style(style);
  if (!fs) throw Error(ErrorCode::invalid_project, std::string(path) + ".flow_style '" + style + "' is unknown");
  s.flow_style = *fs;
  const auto rule = get_or<std::string>(j, "traffic_rule", "right", path);
  auto tr = parse_traffic_rule(rule);
  if (!tr) throw Error(ErrorCode::invalid_project, std::string(path) + ".traffic_rule must be right or left");
  s.traffic_rule = *tr;
  const auto mode = get_or<std::string>(j, "path_mode", "fidelity", path);
  auto pm = parse_path_mode(mode);
  if (!pm) throw Error(ErrorCode::invalid_project, std::string(path) + ".path_mode must be fidelity or corrected");
  s.path_mode = *pm;

  if (auto it = j.find("scaling"); it != j.end() && it->is_object()) {
    const std::string sp = std::string(path) + ".scaling";
    const auto kind = get_or<std::string>(*it, "kind", "proportional", sp);
    if (kind == "proportional") {
      s.scaling.kind = ScalingSpec::Kind::proportional;
    } else if (kind == "classified") {
      s.scaling.kind = ScalingSpec::Kind::classified;
      s.scaling.method = method_from(*it, sp);
      s.scaling.k = get_or<int>(*it, "k", 5, sp);
      s.scaling.breaks = breaks_from(*it, sp);
    } else {
      throw Error(ErrorCode::invalid_project, sp + ".kind must be proportional or classified");
    }
  }
  if (auto it = j.find("width_range"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      throw Error(ErrorCode::invalid_project, std::string(path) + ".width_range must be [min, max]");
    }
    s.width_min = (*it)[0].get<double>();
    s.width_max = (*it)[1].get<double>();
  }
  if (auto it = j.find("color"); it != j.end() && it->is_object()) {
    const std::string cp = std::string(path) + ".color";
    const auto cmode = get_or<std::string>(*it, "mode", "single", cp);
    if (cmode == "single") {
      s.color.mode = ColorSpec::Mode::single;
      if (it->contains("color")) s.color.color = rgb_from(it->at("color"), cp + ".color");
    } else if (cmode == "continuous") {
      s.color.mode = ColorSpec::Mode::continuous;
      if (it->contains("from")) s.color.from = rgb_from(it->at("from"), cp + ".from");
      if (it->contains("to")) s.color.to = rgb_from(it->at("to"), cp + ".to");
    } else if (cmode == "classified") {
      s.color.mode = ColorSpec::Mode::classified;
      s.color.scheme = get_or<std::string>(*it, "scheme", "Blues", cp);
      s.color.k = get_or<int>(*it, "k", 5, cp);
      s.color.method = method_from(*it, cp);
      s.color.breaks = breaks_from(*it, cp);
    } else {
      throw Error(ErrorCode::invalid_project, cp + ".mode must be single, continuous or classified");
    }
  }
  if (auto it = j.find("stroke"); it != j.end() && it->is_object()) {
    const std::string sp = std::string(path) + ".stroke";
    if (it->contains("color")) s.stroke.color = rgb_from(it->at("color"), sp + ".color");
    s.stroke.width = get_or<double>(*it, "width", s.stroke.width, sp);
  }
  s.opacity = get_or<double>(j, "opacity", 1.0, path);
  if (auto it = j.find("top_n"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) {
      throw Error(ErrorCode::invalid_project, std::string(path) + ".top_n must be a positive integer");
    }
    s.top_n = it->get<std::size_t>();
  }
  if (auto it = j.find("legend"); it != j.end() && it->is_object()) {
    const std::string lp = std::string(path) + ".legend";
    s.legend.visible = get_or<bool>(*it, "visible", true, lp);
    s.legend.title = get_or<std::string>(*it, "title", "", lp);
    s.legend.decimals = get_or<int>(*it, "decimals", 0, lp);
  }
  return s;
}

inline std::optional<std::string> optional_text(const pjson& obj, const char* key, std::string_view path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(ErrorCode::invalid_project, std::string(path) + "." + key + " must be a string");
  return it->get<std::string>();
}

}  // namespace detail

inline nlohmann::ordered_json project_to_json(const ProjectFile& p) {
  using detail::pjson;
  pjson j;
  j["version"] = p.version;
  pjson ds;
  ds["nodes_csv"] = p.datasets.nodes_csv;
  ds["flows_csv"] = p.datasets.flows_csv;
  ds["regions_geojson"] = p.datasets.regions_geojson ? pjson(*p.datasets.regions_geojson) : pjson(nullptr);
  ds["region_attributes_csv"] =
      p.datasets.region_attributes_csv ? pjson(*p.datasets.region_attributes_csv) : pjson(nullptr);
  j["datasets"] = ds;
  j["joins"] = {{"region_id_property", p.joins.region_id_property},
                {"attribute_id_column", p.joins.attribute_id_column},
                {"node_id_column", p.joins.node_id_column},
                {"node_x_column", p.joins.node_x_column},
                {"node_y_column", p.joins.node_y_column},
                {"flow_origin_column", p.joins.flow_origin_column},
                {"flow_dest_column", p.joins.flow_dest_column},
                {"flow_value_column", p.joins.flow_value_column}};
  j["layers"] = {{"regions", detail::to_json(p.regions)},
                 {"nodes", detail::to_json(p.nodes)},
                 {"flows", detail::to_json(p.flows)}};
  pjson proj{{"kind", std::string(to_string(p.map.projection.kind))}};
  if (p.map.projection.kind == ProjectionKind::albers) proj["preset"] = std::string(to_string(p.map.projection.preset));
  pjson labels = pjson::array();
  for (const auto& l : p.map.labels) labels.push_back({{"text", l.text}, {"lon", l.lon}, {"lat", l.lat}});
  j["map"] = {{"width", p.map.width},
              {"height", p.map.height},
              {"projection", proj},
              {"background", p.map.background.hex()},
              {"opacity", p.map.background_opacity},
              {"title", p.map.title},
              {"north_arrow", p.map.north_arrow},
              {"north_arrow_corner", std::string(to_string(p.map.north_arrow_corner))},
              {"projection_label", p.map.projection_label},
              {"labels", labels},
              {"dim_factor", p.map.dim_factor},
              {"decimals", p.map.decimals},
              {"legend_offset", {p.map.legend_offset.x, p.map.legend_offset.y}}};
  return j;
}

inline std::string save_project(const ProjectFile& p) { return project_to_json(p).dump(2) + "\n"; }

inline void validate_project(const ProjectFile& p);

inline ProjectFile project_from_json(const nlohmann::ordered_json& j) {
  using detail::get_or;
  using detail::require;
  if (!j.is_object()) throw Error(ErrorCode::invalid_project, "project must be a JSON object");
  auto v = j.find("version");
  if (v == j.end()) throw Error(ErrorCode::invalid_project, "missing \"version\"");
  if (!v->is_string() || v->get<std::string>() != kProjectFormatVersion) {
    throw Error(ErrorCode::invalid_project, "unsupported project version " + v->dump());
  }
  ProjectFile p;
  const auto& ds = require(j, "datasets", "project");
  if (!ds.is_object()) throw Error(ErrorCode::invalid_project, "project.datasets must be an object");
  auto nodes = detail::optional_text(ds, "nodes_csv", "datasets");
  auto flows = detail::optional_text(ds, "flows_csv", "datasets");
  if (!nodes || !flows) throw Error(ErrorCode::invalid_project, "datasets.nodes_csv and datasets.flows_csv are required");
  p.datasets.nodes_csv = *nodes;
  p.datasets.flows_csv = *flows;
  p.datasets.regions_geojson = detail::optional_text(ds, "regions_geojson", "datasets");
  p.datasets.region_attributes_csv = detail::optional_text(ds, "region_attributes_csv", "datasets");

  if (auto it = j.find("joins"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorCode::invalid_project, "project.joins must be an object");
    const JoinSpec d;
    p.joins.region_id_property = get_or<std::string>(*it, "region_id_property", d.region_id_property, "joins");
    p.joins.attribute_id_column = get_or<std::string>(*it, "attribute_id_column", d.attribute_id_column, "joins");
    p.joins.node_id_column = get_or<std::string>(*it, "node_id_column", d.node_id_column, "joins");
    p.joins.node_x_column = get_or<std::string>(*it, "node_x_column", d.node_x_column, "joins");
    p.joins.node_y_column = get_or<std::string>(*it, "node_y_column", d.node_y_column, "joins");
    p.joins.flow_origin_column = get_or<std::string>(*it, "flow_origin_column", d.flow_origin_column, "joins");
    p.joins.flow_dest_column = get_or<std::string>(*it, "flow_dest_column", d.flow_dest_column, "joins");
    p.joins.flow_value_column = get_or<std::string>(*it, "flow_value_column", d.flow_value_column, "joins");
  }

  if (auto it = j.find("layers"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorCode::invalid_project, "project.layers must be an object");
    if (it->contains("regions")) p.regions = detail::layer_from(it->at("regions"), "layers.regions");
    if (it->contains("nodes")) p.nodes = detail::layer_from(it->at("nodes"), "layers.nodes");
    if (it->contains("flows")) p.flows = detail::layer_from(it->at("flows"), "layers.flows");
  }

  if (auto it = j.find("map"); it != j.end()) {
    const auto& m = *it;
    if (!m.is_object()) throw Error(ErrorCode::invalid_project, "project.map must be an object");
    const MapSettings d;
    p.map.width = get_or<double>(m, "width", d.width, "map");
    p.map.height = get_or<double>(m, "height", d.height, "map");
    if (auto pj = m.find("projection"); pj != m.end() && pj->is_object()) {
      const auto kind = get_or<std::string>(*pj, "kind", "mercator", "map.projection");
      auto k = parse_projection_kind(kind);
      if (!k) throw Error(ErrorCode::invalid_project, "map.projection.kind '" + kind + "' is unknown");
      p.map.projection.kind = *k;
      if (*k == ProjectionKind::albers) {
        const auto preset = get_or<std::string>(*pj, "preset", "US", "map.projection");
        auto pr = parse_albers_preset(preset);
        if (!pr) throw Error(ErrorCode::invalid_project, "map.projection.preset '" + preset + "' is unknown");
        p.map.projection.preset = *pr;
      }
    }
    if (m.contains("background")) p.map.background = detail::rgb_from(m.at("background"), "map.background");
    p.map.background_opacity = get_or<double>(m, "opacity", d.background_opacity, "map");
    p.map.title = get_or<std::string>(m, "title", d.title, "map");
    p.map.north_arrow = get_or<bool>(m, "north_arrow", d.north_arrow, "map");
    const auto corner = get_or<std::string>(m, "north_arrow_corner", "top_right", "map");
    auto c = parse_corner(corner);
    if (!c) throw Error(ErrorCode::invalid_project, "map.north_arrow_corner '" + corner + "' is unknown");
    p.map.north_arrow_corner = *c;
    p.map.projection_label = get_or<bool>(m, "projection_label", d.projection_label, "map");
    if (auto lb = m.find("labels"); lb != m.end() && !lb->is_null()) {
      if (!lb->is_array()) throw Error(ErrorCode::invalid_project, "map.labels must be an array");
      for (const auto& l : *lb) {
        if (!l.is_object()) throw Error(ErrorCode::invalid_project, "map.labels entries must be objects");
        CustomLabel cl;
        cl.text = get_or<std::string>(l, "text", "", "map.labels[]");
        cl.lon = detail::require(l, "lon", "map.labels[]").is_number() ? l.at("lon").get<double>() : NAN;
        cl.lat = detail::require(l, "lat", "map.labels[]").is_number() ? l.at("lat").get<double>() : NAN;
        if (!valid_lon_lat(cl.lon, cl.lat)) {
          throw Error(ErrorCode::invalid_project, "map.labels[] anchor must be a valid lon/lat");
        }
        p.map.labels.push_back(std::move(cl));
      }
    }
    p.map.dim_factor = get_or<double>(m, "dim_factor", d.dim_factor, "map");
    p.map.decimals = get_or<int>(m, "decimals", d.decimals, "map");
    if (auto lo = m.find("legend_offset"); lo != m.end() && !lo->is_null()) {
      if (!lo->is_array() || lo->size() != 2 || !(*lo)[0].is_number() || !(*lo)[1].is_number()) {
        throw Error(ErrorCode::invalid_project, "map.legend_offset must be [x, y]");
      }
      p.map.legend_offset = {(*lo)[0].get<double>(), (*lo)[1].get<double>()};
    }
  }
  validate_project(p);
  return p;
}

inline ProjectFile load_project(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::invalid_project, "project is not valid JSON (byte " + std::to_string(e.byte) + ")");
  }
  return project_from_json(j);
}

// ---------------------------------------------------------------------------
// Resolution: parse the embedded datasets and perform every join.

struct ResolvedProject {
  FlowNetwork network;
  std::vector<RegionFeature> regions;
  std::optional<JoinReport> region_join;
};

namespace detail {

inline void require_join_column(const AttributeTable& t, const std::string& col, std::string_view dataset,
                                std::string_view role) {
  if (!t.column(col)) {
    std::vector<std::string> details{"available columns:"};
    for (const auto& h : t.header) details.push_back("  " + h);
    throw Error(ErrorCode::unresolved_join,
                std::string(role) + " column '" + col + "' not found in " + std::string(dataset), details);
  }
}

[[noreturn]] inline void rethrow_as_join(const Error& e, std::string_view dataset) {
  if (e.code() == ErrorCode::missing_column) {
    throw Error(ErrorCode::unresolved_join, std::string(dataset) + ": " + e.message(), e.details(), e.row());
  }
  throw e;
}

}  // namespace detail

inline ResolvedProject resolve_project(const ProjectFile& p) {
  const auto& jn = p.joins;
  ResolvedProject r;

  std::vector<NodeRecord> nodes;
  std::vector<FlowRecord> flows;
  try {
    nodes = parse_nodes_csv(p.datasets.nodes_csv, jn.node_id_column, jn.node_x_column, jn.node_y_column);
  } catch (const Error& e) {
    detail::rethrow_as_join(e, "nodes");
  }
  try {
    flows = parse_flows_csv(p.datasets.flows_csv, jn.flow_origin_column, jn.flow_dest_column, jn.flow_value_column);
  } catch (const Error& e) {
    detail::rethrow_as_join(e, "flows");
  }
  if (nodes.empty()) throw Error(ErrorCode::empty_dataset, "nodes dataset has no rows");
  r.network = build_network(std::move(nodes), std::move(flows));

  if (p.datasets.regions_geojson) {
    auto regions = parse_regions(*p.datasets.regions_geojson,
                                 jn.region_id_property.empty() ? std::nullopt
                                                               : std::optional<std::string_view>(jn.region_id_property));
    if (p.datasets.region_attributes_csv) {
      const auto table = parse_csv(*p.datasets.region_attributes_csv);
      detail::require_join_column(table, jn.attribute_id_column, "region attributes", "attribute id");
      const bool has_prop = std::any_of(regions.begin(), regions.end(), [&](const RegionFeature& f) {
        return f.attributes.find(jn.region_id_property) != nullptr;
      });
      if (!regions.empty() && !has_prop) {
        throw Error(ErrorCode::unresolved_join,
                    "region id property '" + jn.region_id_property + "' not found on any feature");
      }
      auto joined = join_attributes(std::move(regions), table, jn.region_id_property, jn.attribute_id_column);
      if (joined.report.matched == 0 && !joined.features.empty() && !table.rows.empty()) {
        throw Error(ErrorCode::unresolved_join, "region join matched no features", joined.report.lines());
      }
      r.regions = std::move(joined.features);
      r.region_join = std::move(joined.report);
    } else {
      r.regions = std::move(regions);
    }
  }
  return r;
}

inline void validate_project(const ProjectFile& p) {
  validate(p.regions, "regions");
  validate(p.nodes, "nodes");
  validate(p.flows, "flows");
  if (!(p.map.width > 0.0 && p.map.height > 0.0)) {
    throw Error(ErrorCode::invalid_project, "map width and height must be positive");
  }
  if (p.map.decimals < 1 || p.map.decimals > 6) {
    throw Error(ErrorCode::invalid_project, "map.decimals must be in [1, 6]");
  }
  if (!(p.map.dim_factor >= 0.0 && p.map.dim_factor <= 1.0)) {
    throw Error(ErrorCode::invalid_project, "map.dim_factor must be in [0, 1]");
  }
  if (!(p.map.background_opacity >= 0.0 && p.map.background_opacity <= 1.0)) {
    throw Error(ErrorCode::invalid_project, "map.opacity must be in [0, 1]");
  }
  // Join fields must name columns that exist in the embedded data.
  const auto& jn = p.joins;
  AttributeTable nodes, flows;
  try {
    nodes = parse_csv(p.datasets.nodes_csv);
    flows = parse_csv(p.datasets.flows_csv);
  } catch (const Error& e) {
    throw Error(ErrorCode::invalid_project, "embedded CSV is malformed: " + e.message(), e.details(), e.row());
  }
  detail::require_join_column(nodes, jn.node_id_column, "nodes", "node id");
  detail::require_join_column(nodes, jn.node_x_column, "nodes", "node X");
  detail::require_join_column(nodes, jn.node_y_column, "nodes", "node Y");
  detail::require_join_column(flows, jn.flow_origin_column, "flows", "flow origin");
  detail::require_join_column(flows, jn.flow_dest_column, "flows", "flow destination");
  detail::require_join_column(flows, jn.flow_value_column, "flows", "flow value");
  if (p.datasets.region_attributes_csv) {
    AttributeTable attrs;
    try {
      attrs = parse_csv(*p.datasets.region_attributes_csv);
    } catch (const Error& e) {
      throw Error(ErrorCode::invalid_project, "embedded region attribute CSV is malformed: " + e.message());
    }
    detail::require_join_column(attrs, jn.attribute_id_column, "region attributes", "attribute id");
  }
}

}  // namespace odflow
