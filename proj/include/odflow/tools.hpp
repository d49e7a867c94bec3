#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "odflow/analytics.hpp"
#include "odflow/core_model.hpp"
#include "odflow/csv.hpp"
#include "odflow/ingest.hpp"

namespace odflow {

/// Polygons-to-points: one row per feature at its area-weighted centroid.
inline std::string poly2points(std::string_view geojson, std::optional<std::string_view> id_property = std::nullopt) {
  return points_csv(polygons_to_points(parse_regions(geojson, id_property)));
}

struct NormalizeRequest {
  std::string flows_csv;
  std::optional<std::string> nodes_csv;
  ExpectationModel model = ExpectationModel::adjusted_paper;
  std::optional<double> beta;
  std::optional<std::string> distances_csv;  // columns origin_id, dest_id, distance
  std::string origin_field = "origin";
  std::string dest_field = "dest";
  std::string value_field = "value";
  std::string node_id_field = "id";
  std::string node_x_field = "X";
  std::string node_y_field = "Y";
};

/// Reads a long-form distance table into node order. A pair given in one
/// direction only is used for both.
inline SquareMatrix parse_distances_csv(std::string_view text, const FlowNetwork& network) {
  const auto table = parse_csv(text);
  const auto oc = table.require_column("origin_id");
  const auto dc = table.require_column("dest_id");
  const auto vc = table.require_column("distance");
  const auto n = network.nodes().size();
  SquareMatrix d(n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto o = network.index_of(trim(row[oc]));
    const auto t = network.index_of(trim(row[dc]));
    if (!o || !t) {
      throw Error(ErrorCode::unknown_node_reference, "distance row names an unknown node", {}, r + 1);
    }
    const auto v = parse_decimal(row[vc]);
    if (!v) throw Error(ErrorCode::non_numeric_value, "distance is not a number: '" + row[vc] + "'", {}, r + 1);
    d(*o, *t) = *v;
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        d(i, j) = 0.0;
        continue;
      }
      if (std::isnan(d(i, j))) d(i, j) = d(j, i);
      if (std::isnan(d(i, j))) missing.push_back(network.nodes()[i].id + " -> " + network.nodes()[j].id);
    }
  }
  if (!missing.empty()) throw Error(ErrorCode::invalid_argument, "distance table is incomplete", missing);
  return d;
}

/// Normalize-flows: observed, expected and modularity per node pair. Without
/// a node table the node set is taken from the flow ids and has no
/// coordinates, so the gravity model then needs an explicit distance table.
inline std::string normalize_flows(const NormalizeRequest& req) {
  const auto flows = parse_flows_csv(req.flows_csv, req.origin_field, req.dest_field, req.value_field);
  std::vector<NodeRecord> nodes;
  const bool have_coordinates = req.nodes_csv.has_value();
  if (have_coordinates) {
    nodes = parse_nodes_csv(*req.nodes_csv, req.node_id_field, req.node_x_field, req.node_y_field);
  } else {
    std::set<std::string> seen;
    for (const auto& f : flows) {
      for (const auto* id : {&f.origin_id, &f.dest_id}) {
        if (seen.insert(*id).second) nodes.push_back({*id, 0.0, 0.0, {}});
      }
    }
  }
  if (req.model == ExpectationModel::gravity && !have_coordinates && !req.distances_csv) {
    throw Error(ErrorCode::invalid_argument, "the gravity model needs node coordinates or a distance table");
  }
  const auto network = build_network(std::move(nodes), flows);
  std::optional<SquareMatrix> distances;
  if (req.distances_csv) distances = parse_distances_csv(*req.distances_csv, network);
  const auto expected = expected_flows(network, req.model, req.beta, distances);
  return modularity_csv(modularity_transform(network, expected));
}

}  // namespace odflow
