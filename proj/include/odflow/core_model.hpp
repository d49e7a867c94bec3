#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "odflow/csv.hpp"
#include "odflow/error.hpp"
#include "odflow/numeric.hpp"

namespace odflow {

/// A single attribute cell. The source text is kept verbatim so records
/// serialize back unchanged; `number` is set when the text is a decimal real.
struct AttrValue {
  std::string text;
  std::optional<double> number;

  static AttrValue from_text(std::string t) {
    AttrValue v{std::move(t), std::nullopt};
    v.number = parse_decimal(v.text);
    return v;
  }
  static AttrValue from_number(double x) { return {format_shortest(x), x}; }

  bool operator==(const AttrValue&) const = default;
};

/// Insertion-ordered attribute map.
class Attributes {
 public:
  using Entry = std::pair<std::string, AttrValue>;

  const AttrValue* find(std::string_view name) const {
    for (const auto& [k, v] : entries_) {
      if (k == name) return &v;
    }
    return nullptr;
  }

  void set(std::string name, AttrValue value) {
    for (auto& [k, v] : entries_) {
      if (k == name) {
        v = std::move(value);
        return;
      }
    }
    entries_.emplace_back(std::move(name), std::move(value));
  }

  std::optional<double> number(std::string_view name) const {
    const auto* v = find(name);
    return v ? v->number : std::nullopt;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const Attributes&) const = default;

 private:
  std::vector<Entry> entries_;
};

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
  bool operator==(const LonLat&) const = default;
};

struct NodeRecord {
  std::string id;
  double lon = 0.0;
  double lat = 0.0;
  Attributes attributes;

  bool operator==(const NodeRecord&) const = default;
};

struct FlowRecord {
  std::string origin_id;
  std::string dest_id;
  double value = 0.0;
  Attributes attributes;

  bool is_self_flow() const { return origin_id == dest_id; }
  bool operator==(const FlowRecord&) const = default;
};

using Ring = std::vector<LonLat>;

/// One polygon: rings.front() is the exterior, the rest are holes.
struct Polygon {
  std::vector<Ring> rings;
};

struct RegionFeature {
  std::string id;
  std::vector<Polygon> polygons;
  Attributes attributes;
};

inline bool valid_lon_lat(double lon, double lat) {
  return std::isfinite(lon) && std::isfinite(lat) && lon >= -180.0 && lon <= 180.0 &&
         lat >= -90.0 && lat <= 90.0;
}

/// Validated join of nodes and directed flows. Strengths and the total are
/// correctly rounded sums, so they do not depend on input row order. Self
/// flows count toward the raw strengths and total.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<FlowRecord>& flows() const { return flows_; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  double out_strength(std::size_t node) const { return out_.at(node); }
  double in_strength(std::size_t node) const { return in_.at(node); }
  double out_strength(std::string_view id) const { return out_.at(require(id)); }
  double in_strength(std::string_view id) const { return in_.at(require(id)); }
  const std::vector<double>& out_strengths() const { return out_; }
  const std::vector<double>& in_strengths() const { return in_; }
  double total() const { return total_; }

  // Endpoint indices of flows()[i].
  std::size_t origin_index(std::size_t flow) const { return endpoints_.at(flow).first; }
  std::size_t dest_index(std::size_t flow) const { return endpoints_.at(flow).second; }

 private:
  friend FlowNetwork build_network(std::vector<NodeRecord> nodes, std::vector<FlowRecord> flows);

  std::size_t require(std::string_view id) const {
    if (auto i = index_of(id)) return *i;
    throw Error(ErrorCode::unknown_node_reference, "unknown node id '" + std::string(id) + "'");
  }

  std::vector<NodeRecord> nodes_;
  std::vector<FlowRecord> flows_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<double> out_;
  std::vector<double> in_;
  double total_ = 0.0;
};

/// Joins flows to nodes by exact trimmed id. Every unresolved endpoint is
/// reported (1-based flow rows) rather than dropped.
inline FlowNetwork build_network(std::vector<NodeRecord> nodes, std::vector<FlowRecord> flows) {
  FlowNetwork net;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& n = nodes[i];
    n.id = std::string(trim(n.id));
    if (n.id.empty()) {
      throw Error(ErrorCode::missing_value, "node at row " + std::to_string(i + 1) + " has an empty id",
                  {}, i + 1);
    }
    if (!net.index_.emplace(n.id, i).second) {
      throw Error(ErrorCode::duplicate_node_id, "duplicate node id '" + n.id + "'",
                  {"row " + std::to_string(i + 1)}, i + 1);
    }
  }

  std::vector<std::string> unresolved;
  std::vector<std::vector<double>> outs(nodes.size());
  std::vector<std::vector<double>> ins(nodes.size());
  std::vector<double> all;
  all.reserve(flows.size());
  net.endpoints_.reserve(flows.size());
  for (std::size_t r = 0; r < flows.size(); ++r) {
    auto& f = flows[r];
    f.origin_id = std::string(trim(f.origin_id));
    f.dest_id = std::string(trim(f.dest_id));
    if (!std::isfinite(f.value)) {
      throw Error(ErrorCode::non_numeric_value, "flow row " + std::to_string(r + 1) + " value is not finite",
                  {}, r + 1);
    }
    if (f.value < 0.0) {
      throw Error(ErrorCode::non_negative_violation,
                  "flow row " + std::to_string(r + 1) + " has negative value " + format_shortest(f.value),
                  {}, r + 1);
    }
    auto o = net.index_.find(f.origin_id);
    auto d = net.index_.find(f.dest_id);
    if (o == net.index_.end() || d == net.index_.end()) {
      std::string msg = "row " + std::to_string(r + 1) + ":";
      if (o == net.index_.end()) msg += " origin '" + f.origin_id + "'";
      if (d == net.index_.end()) msg += " destination '" + f.dest_id + "'";
      unresolved.push_back(std::move(msg));
      continue;
    }
    net.endpoints_.emplace_back(o->second, d->second);
    outs[o->second].push_back(f.value);
    ins[d->second].push_back(f.value);
    all.push_back(f.value);
  }
  if (!unresolved.empty()) {
    throw Error(ErrorCode::unknown_node_reference,
                std::to_string(unresolved.size()) + " flow row(s) reference unknown nodes", unresolved);
  }

  net.out_.resize(nodes.size());
  net.in_.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    net.out_[i] = exact_sum(outs[i]);
    net.in_[i] = exact_sum(ins[i]);
  }
  net.total_ = exact_sum(all);
  net.nodes_ = std::move(nodes);
  net.flows_ = std::move(flows);
  return net;
}

/// Builds flows from a raw table by named columns, then joins them to nodes.
inline FlowNetwork build_network(std::vector<NodeRecord> nodes, const AttributeTable& flow_table,
                                 std::string_view origin_field, std::string_view dest_field,
                                 std::string_view value_field) {
  const auto oc = flow_table.require_column(origin_field);
  const auto dc = flow_table.require_column(dest_field);
  const auto vc = flow_table.require_column(value_field);
  std::vector<FlowRecord> flows;
  flows.reserve(flow_table.rows.size());
  for (std::size_t r = 0; r < flow_table.rows.size(); ++r) {
    const auto& row = flow_table.rows[r];
    auto value = parse_decimal(row[vc]);
    if (!value) {
      throw Error(ErrorCode::non_numeric_value,
                  "row " + std::to_string(r + 1) + " column '" + std::string(value_field) +
                      "' is not a decimal number: '" + row[vc] + "'",
                  {}, r + 1);
    }
    FlowRecord f{row[oc], row[dc], *value, {}};
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == oc || c == dc || c == vc) continue;
      f.attributes.set(flow_table.header[c], AttrValue::from_text(row[c]));
    }
    flows.push_back(std::move(f));
  }
  return build_network(std::move(nodes), std::move(flows));
}

}  // namespace odflow
