#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "odflow/core_model.hpp"
#include "odflow/csv.hpp"
#include "odflow/error.hpp"
#include "odflow/numeric.hpp"

namespace odflow {

namespace detail {

inline double require_number(const std::string& cell, std::string_view column, std::size_t row) {
  auto v = parse_decimal(cell);
  if (!v) {
    throw Error(ErrorCode::non_numeric_value,
                "row " + std::to_string(row) + " column '" + std::string(column) +
                    "' is not a decimal number: '" + cell + "'",
                {}, row);
  }
  return *v;
}

}  // namespace detail

/// Parses a node table. Columns other than id/x/y become attributes in header
/// order. Rows are 1-based data rows (the header is not counted).
inline std::vector<NodeRecord> parse_nodes_csv(std::string_view text, std::string_view id_field,
                                               std::string_view x_field, std::string_view y_field) {
  const auto table = parse_csv(text);
  const auto ic = table.require_column(id_field);
  const auto xc = table.require_column(x_field);
  const auto yc = table.require_column(y_field);

  std::vector<NodeRecord> nodes;
  nodes.reserve(table.rows.size());
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_no = r + 1;
    NodeRecord n;
    n.id = std::string(trim(row[ic]));
    if (n.id.empty()) {
      throw Error(ErrorCode::missing_value, "row " + std::to_string(row_no) + " has an empty id", {},
                  row_no);
    }
    n.lon = detail::require_number(row[xc], x_field, row_no);
    n.lat = detail::require_number(row[yc], y_field, row_no);
    if (!valid_lon_lat(n.lon, n.lat)) {
      throw Error(ErrorCode::coordinate_out_of_range,
                  "row " + std::to_string(row_no) + " ('" + n.id + "') has coordinates (" +
                      format_shortest(n.lon) + ", " + format_shortest(n.lat) + ") outside WGS84 range",
                  {}, row_no);
    }
    if (!seen.insert(n.id).second) {
      throw Error(ErrorCode::duplicate_node_id,
                  "row " + std::to_string(row_no) + " repeats node id '" + n.id + "'", {}, row_no);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == ic || c == xc || c == yc) continue;
      n.attributes.set(table.header[c], AttrValue::from_text(row[c]));
    }
    nodes.push_back(std::move(n));
  }
  return nodes;
}

inline std::vector<FlowRecord> parse_flows_csv(std::string_view text, std::string_view origin_field,
                                               std::string_view dest_field, std::string_view value_field) {
  const auto table = parse_csv(text);
  const auto oc = table.require_column(origin_field);
  const auto dc = table.require_column(dest_field);
  const auto vc = table.require_column(value_field);

  std::vector<FlowRecord> flows;
  flows.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_no = r + 1;
    FlowRecord f;
    f.origin_id = std::string(trim(row[oc]));
    f.dest_id = std::string(trim(row[dc]));
    if (f.origin_id.empty() || f.dest_id.empty()) {
      throw Error(ErrorCode::missing_value, "row " + std::to_string(row_no) + " has an empty origin or destination",
                  {}, row_no);
    }
    f.value = detail::require_number(row[vc], value_field, row_no);
    if (f.value < 0.0) {
      throw Error(ErrorCode::non_negative_violation,
                  "row " + std::to_string(row_no) + " has negative flow value " + format_shortest(f.value),
                  {}, row_no);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == oc || c == dc || c == vc) continue;
      f.attributes.set(table.header[c], AttrValue::from_text(row[c]));
    }
    flows.push_back(std::move(f));
  }
  return flows;
}

namespace detail {

// Attribute names in first-seen order, minus names taken by fixed columns.
template <typename Record>
std::vector<std::string> attribute_columns(const std::vector<Record>& records,
                                           std::initializer_list<std::string_view> reserved) {
  std::vector<std::string> cols;
  std::unordered_set<std::string> seen;
  for (auto r : reserved) seen.emplace(r);
  for (const auto& rec : records) {
    for (const auto& [k, v] : rec.attributes.entries()) {
      if (seen.insert(k).second) cols.push_back(k);
    }
  }
  return cols;
}

}  // namespace detail

inline std::string serialize_nodes_csv(const std::vector<NodeRecord>& nodes, std::string_view id_field = "id",
                                       std::string_view x_field = "X", std::string_view y_field = "Y") {
  AttributeTable t;
  t.header = {std::string(id_field), std::string(x_field), std::string(y_field)};
  const auto cols = detail::attribute_columns(nodes, {id_field, x_field, y_field});
  t.header.insert(t.header.end(), cols.begin(), cols.end());
  for (const auto& n : nodes) {
    std::vector<std::string> row{n.id, format_shortest(n.lon), format_shortest(n.lat)};
    for (const auto& c : cols) {
      const auto* v = n.attributes.find(c);
      row.push_back(v ? v->text : std::string());
    }
    t.rows.push_back(std::move(row));
  }
  return write_csv(t);
}

inline std::string serialize_flows_csv(const std::vector<FlowRecord>& flows,
                                       std::string_view origin_field = "origin",
                                       std::string_view dest_field = "dest",
                                       std::string_view value_field = "value") {
  AttributeTable t;
  t.header = {std::string(origin_field), std::string(dest_field), std::string(value_field)};
  const auto cols = detail::attribute_columns(flows, {origin_field, dest_field, value_field});
  t.header.insert(t.header.end(), cols.begin(), cols.end());
  for (const auto& f : flows) {
    std::vector<std::string> row{f.origin_id, f.dest_id, format_shortest(f.value)};
    for (const auto& c : cols) {
      const auto* v = f.attributes.find(c);
      row.push_back(v ? v->text : std::string());
    }
    t.rows.push_back(std::move(row));
  }
  return write_csv(t);
}

// ---------------------------------------------------------------------------
// GeoJSON regions

namespace detail {

using ojson = nlohmann::ordered_json;

inline AttrValue attr_from_json(const ojson& v) {
  if (v.is_string()) return AttrValue::from_text(v.get<std::string>());
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return AttrValue{v.dump(), v.get<double>()};
  }
  if (v.is_number_float()) {
    const double x = v.get<double>();
    return AttrValue{format_shortest(x), x};
  }
  if (v.is_null()) return AttrValue{};
  return AttrValue{v.dump(), std::nullopt};
}

inline Ring parse_ring(const ojson& coords, std::size_t feature) {
  if (!coords.is_array()) {
    throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(feature) + ": ring is not an array");
  }
  Ring ring;
  ring.reserve(coords.size());
  for (const auto& pt : coords) {
    if (!pt.is_array() || pt.size() < 2 || !pt[0].is_number() || !pt[1].is_number()) {
      throw Error(ErrorCode::malformed_geojson,
                  "feature " + std::to_string(feature) + ": position is not [lon, lat]");
    }
    ring.push_back({pt[0].get<double>(), pt[1].get<double>()});
  }
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  std::vector<LonLat> distinct;
  for (const auto& p : ring) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    if (!valid_lon_lat(p.lon, p.lat)) {
      throw Error(ErrorCode::coordinate_out_of_range,
                  "feature " + std::to_string(feature) + ": vertex (" + format_shortest(p.lon) + ", " +
                      format_shortest(p.lat) + ") outside WGS84 range");
    }
  }
  if (distinct.size() < 3) {
    throw Error(ErrorCode::malformed_geojson,
                "feature " + std::to_string(feature) + ": ring has fewer than 3 distinct vertices");
  }
  return ring;
}

inline Polygon parse_polygon(const ojson& coords, std::size_t feature) {
  if (!coords.is_array() || coords.empty()) {
    throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(feature) + ": polygon has no rings");
  }
  Polygon poly;
  for (const auto& ring : coords) poly.rings.push_back(parse_ring(ring, feature));
  return poly;
}

}  // namespace detail

/// Parses a GeoJSON FeatureCollection of Polygon / MultiPolygon features.
/// The feature id is read from `id_property` when given and present, then
/// from the feature's "id" member, and falls back to the feature index.
inline std::vector<RegionFeature> parse_regions(std::string_view text,
                                                std::optional<std::string_view> id_property = std::nullopt) {
  detail::ojson doc;
  try {
    doc = detail::ojson::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::malformed_geojson,
                "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection") {
    throw Error(ErrorCode::malformed_geojson, "top-level object is not a FeatureCollection");
  }
  const auto features = doc.find("features");
  if (features == doc.end() || !features->is_array()) {
    throw Error(ErrorCode::malformed_geojson, "FeatureCollection has no \"features\" array");
  }

  std::vector<RegionFeature> out;
  out.reserve(features->size());
  std::size_t index = 0;
  for (const auto& f : *features) {
    if (!f.is_object() || f.value("type", "") != "Feature") {
      throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(index) + " is not a Feature object");
    }
    RegionFeature region;
    if (auto props = f.find("properties"); props != f.end() && props->is_object()) {
      for (const auto& [k, v] : props->items()) region.attributes.set(k, detail::attr_from_json(v));
    }

    const auto geom = f.find("geometry");
    if (geom == f.end() || !geom->is_object()) {
      throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(index) + " has no geometry");
    }
    const std::string type = geom->value("type", "");
    const auto coords = geom->find("coordinates");
    if (type == "Polygon" || type == "MultiPolygon") {
      if (coords == geom->end()) {
        throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(index) + " has no coordinates");
      }
      if (type == "Polygon") {
        region.polygons.push_back(detail::parse_polygon(*coords, index));
      } else {
        if (!coords->is_array()) {
          throw Error(ErrorCode::malformed_geojson, "feature " + std::to_string(index) + ": bad MultiPolygon");
        }
        for (const auto& p : *coords) region.polygons.push_back(detail::parse_polygon(p, index));
      }
    } else {
      throw Error(ErrorCode::unsupported_geometry_type,
                  "feature " + std::to_string(index) + " has geometry type '" + type +
                      "'; region files accept Polygon and MultiPolygon only");
    }

    const AttrValue* key = id_property ? region.attributes.find(*id_property) : nullptr;
    if (key && !key->text.empty()) {
      region.id = std::string(trim(key->text));
    } else if (auto fid = f.find("id"); fid != f.end() && !fid->is_null()) {
      region.id = std::string(trim(detail::attr_from_json(*fid).text));
    } else {
      region.id = std::to_string(index);
    }
    out.push_back(std::move(region));
    ++index;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Attribute join

struct JoinReport {
  std::size_t matched = 0;
  std::vector<std::string> unmatched_features;
  std::vector<std::string> unmatched_rows;

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    out.push_back("matched: " + std::to_string(matched));
    std::string uf = "unmatched features (" + std::to_string(unmatched_features.size()) + ")";
    for (std::size_t i = 0; i < unmatched_features.size(); ++i) uf += (i ? ", " : ": ") + unmatched_features[i];
    out.push_back(uf);
    std::string ur = "unmatched table keys (" + std::to_string(unmatched_rows.size()) + ")";
    for (std::size_t i = 0; i < unmatched_rows.size(); ++i) ur += (i ? ", " : ": ") + unmatched_rows[i];
    out.push_back(ur);
    return out;
  }
};

struct JoinResult {
  std::vector<RegionFeature> features;
  JoinReport report;
};

/// Merges table rows into features where the feature property equals the
/// table key (exact trimmed strings). Non-matches on either side land in the
/// report; only a repeated table key is fatal.
inline JoinResult join_attributes(std::vector<RegionFeature> features, const AttributeTable& table,
                                  std::string_view feature_id_prop, std::string_view table_id_col) {
  JoinResult result;
  if (table.header.empty() && table.rows.empty()) {
    for (const auto& f : features) result.report.unmatched_features.push_back(f.id);
    result.features = std::move(features);
    return result;
  }
  const auto key_col = table.require_column(table_id_col);
  std::unordered_map<std::string, std::size_t> by_key;
  std::vector<std::string> key_order;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string key(trim(table.rows[r][key_col]));
    if (!by_key.emplace(key, r).second) {
      throw Error(ErrorCode::ambiguous_key,
                  "table key '" + key + "' in column '" + std::string(table_id_col) + "' repeats",
                  {"row " + std::to_string(r + 1)}, r + 1);
    }
    key_order.push_back(key);
  }

  std::unordered_set<std::string> used;
  for (auto& f : features) {
    std::string fkey;
    if (const auto* v = f.attributes.find(feature_id_prop)) {
      fkey = std::string(trim(v->text));
    } else if (feature_id_prop == "id") {
      fkey = f.id;
    }
    auto it = fkey.empty() ? by_key.end() : by_key.find(fkey);
    if (it == by_key.end()) {
      result.report.unmatched_features.push_back(fkey.empty() ? f.id : fkey);
      continue;
    }
    ++result.report.matched;
    used.insert(it->first);
    const auto& row = table.rows[it->second];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == key_col) continue;
      f.attributes.set(table.header[c], AttrValue::from_text(row[c]));
    }
  }
  for (const auto& key : key_order) {
    if (!used.count(key)) result.report.unmatched_rows.push_back(key);
  }
  result.features = std::move(features);
  return result;
}

// ---------------------------------------------------------------------------
// Centroids

struct AreaCentroid {
  double area = 0.0;  // unsigned
  double x = 0.0;
  double y = 0.0;
};

/// Planar shoelace area and centroid of one ring (lon/lat used as x/y).
/// Vertices are taken relative to the first vertex to limit cancellation.
inline AreaCentroid ring_centroid(const Ring& ring) {
  AreaCentroid out;
  if (ring.size() < 3) return out;
  const double ox = ring.front().lon;
  const double oy = ring.front().lat;
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& p = ring[i];
    const auto& q = ring[(i + 1) % ring.size()];
    const double px = p.lon - ox, py = p.lat - oy;
    const double qx = q.lon - ox, qy = q.lat - oy;
    const double cross = px * qy - qx * py;
    twice_area += cross;
    cx += (px + qx) * cross;
    cy += (py + qy) * cross;
  }
  if (twice_area == 0.0) return out;
  out.area = std::fabs(twice_area) / 2.0;
  out.x = ox + cx / (3.0 * twice_area);
  out.y = oy + cy / (3.0 * twice_area);
  return out;
}

/// Area-weighted centroid over all polygons of a feature; holes subtract.
inline AreaCentroid feature_centroid(const RegionFeature& feature) {
  double area = 0.0, mx = 0.0, my = 0.0;
  for (const auto& poly : feature.polygons) {
    for (std::size_t r = 0; r < poly.rings.size(); ++r) {
      const auto c = ring_centroid(poly.rings[r]);
      const double w = r == 0 ? c.area : -c.area;
      area += w;
      mx += w * c.x;
      my += w * c.y;
    }
  }
  if (!(area > 0.0)) {
    throw Error(ErrorCode::degenerate_geometry, "feature '" + feature.id + "' has zero total area");
  }
  return {area, mx / area, my / area};
}

inline std::vector<NodeRecord> polygons_to_points(const std::vector<RegionFeature>& features) {
  std::vector<NodeRecord> nodes;
  nodes.reserve(features.size());
  for (const auto& f : features) {
    const auto c = feature_centroid(f);
    nodes.push_back({f.id, c.x, c.y, f.attributes});
  }
  return nodes;
}

/// CSV produced by the polygons-to-points tool: id, X, Y, then attributes.
inline std::string points_csv(const std::vector<NodeRecord>& nodes) {
  return serialize_nodes_csv(nodes, "id", "X", "Y");
}

}  // namespace odflow
