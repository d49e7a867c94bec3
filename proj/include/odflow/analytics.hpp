#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odflow/core_model.hpp"
#include "odflow/error.hpp"
#include "odflow/numeric.hpp"

namespace odflow {

struct NodeStats {
  double inflow = 0.0;
  double outflow = 0.0;
  double gross = 0.0;
  double net = 0.0;
  // (in - out) / (in + out); 0 for a node without flows. Also known as
  // migration efficiency.
  double net_ratio = 0.0;
  // Gross flow per 100,000 population.
  std::optional<double> per_capita_gross;
};

inline NodeStats make_node_stats(double inflow, double outflow) {
  NodeStats s;
  s.inflow = inflow;
  s.outflow = outflow;
  s.gross = inflow + outflow;
  s.net = inflow - outflow;
  s.net_ratio = s.gross > 0.0 ? s.net / s.gross : 0.0;
  return s;
}

/// Per-node inflow/outflow summaries keyed by node id. With a population
/// attribute, nodes whose value parses as a number get per_capita_gross;
/// a number <= 0 is an error.
inline std::map<std::string, NodeStats> node_stats(const FlowNetwork& network,
                                                   std::optional<std::string_view> population_attr = std::nullopt) {
  std::map<std::string, NodeStats> out;
  for (std::size_t i = 0; i < network.nodes().size(); ++i) {
    const auto& node = network.nodes()[i];
    auto s = make_node_stats(network.in_strength(i), network.out_strength(i));
    if (population_attr) {
      if (auto pop = node.attributes.number(*population_attr)) {
        if (!(*pop > 0.0)) {
          throw Error(ErrorCode::non_positive_population,
                      "node '" + node.id + "' has population " + format_shortest(*pop));
        }
        s.per_capita_gross = 100000.0 * s.gross / *pop;
      }
    }
    out.emplace(node.id, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expected flows

enum class ExpectationModel { adjusted_paper, adjusted_conserving, gravity };

inline constexpr std::string_view to_string(ExpectationModel m) {
  switch (m) {
    case ExpectationModel::adjusted_paper: return "adjusted-paper";
    case ExpectationModel::adjusted_conserving: return "adjusted-conserving";
    case ExpectationModel::gravity: return "gravity";
  }
  return "";
}

inline std::optional<ExpectationModel> parse_expectation_model(std::string_view s) {
  if (s == "adjusted-paper" || s == "adjusted_paper") return ExpectationModel::adjusted_paper;
  if (s == "adjusted-conserving" || s == "adjusted_conserving") return ExpectationModel::adjusted_conserving;
  if (s == "gravity") return ExpectationModel::gravity;
  return std::nullopt;
}

/// Dense row-major n x n matrix in network node order.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct GravityDiagnostics {
  double beta = 2.0;
  std::vector<double> a;  // origin balance factors
  std::vector<double> b;  // destination balance factors
  int iterations = 0;
  double residual = 0.0;  // max relative marginal error
};

struct ExpectedFlowMatrix {
  ExpectationModel model = ExpectationModel::adjusted_paper;
  // E(O, D) for O != D; the diagonal is always zero.
  SquareMatrix expected;
  std::optional<GravityDiagnostics> gravity;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::string message, ExpectedFlowMatrix last)
      : Error(ErrorCode::no_convergence, std::move(message)), last_(std::move(last)) {}
  const ExpectedFlowMatrix& last_iterate() const { return last_; }

 private:
  ExpectedFlowMatrix last_;
};

struct GravityOptions {
  double beta = 2.0;
  double tolerance = 1e-10;
  int max_iterations = 500;
};

/// Aggregated observed matrix f(O, D) over distinct nodes; self flows dropped.
inline SquareMatrix observed_matrix(const FlowNetwork& network) {
  const auto n = network.nodes().size();
  std::vector<std::vector<double>> cells(n * n);
  for (std::size_t r = 0; r < network.flows().size(); ++r) {
    const auto o = network.origin_index(r);
    const auto d = network.dest_index(r);
    if (o == d) continue;
    cells[o * n + d].push_back(network.flows()[r].value);
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = exact_sum(cells[i * n + j]);
  }
  return m;
}

/// Great-circle distances in kilometres (haversine, mean Earth radius).
inline SquareMatrix great_circle_km(const std::vector<NodeRecord>& nodes) {
  constexpr double kEarthRadiusKm = 6371.0088;
  constexpr double kDeg = 3.14159265358979323846 / 180.0;
  SquareMatrix d(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      const double p1 = nodes[i].lat * kDeg, p2 = nodes[j].lat * kDeg;
      const double dp = p2 - p1;
      const double dl = (nodes[j].lon - nodes[i].lon) * kDeg;
      const double h = std::sin(dp / 2) * std::sin(dp / 2) + std::cos(p1) * std::cos(p2) * std::sin(dl / 2) * std::sin(dl / 2);
      d(i, j) = 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
    }
  }
  return d;
}

namespace detail {

struct Marginals {
  std::vector<double> out;
  std::vector<double> in;
  double total = 0.0;
};

inline Marginals off_diagonal_marginals(const SquareMatrix& f) {
  const auto n = f.size();
  Marginals m{std::vector<double>(n), std::vector<double>(n), 0.0};
  std::vector<double> row, col, all;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    col.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      row.push_back(f(i, j));
      col.push_back(f(j, i));
      all.push_back(f(i, j));
    }
    m.out[i] = exact_sum(row);
    m.in[i] = exact_sum(col);
  }
  m.total = exact_sum(all);
  return m;
}

inline ExpectedFlowMatrix adjusted_expectation(const FlowNetwork& network, bool conserving) {
  const auto f = observed_matrix(network);
  const auto marg = off_diagonal_marginals(f);
  const auto n = f.size();
  if (!(marg.total > 0.0)) {
    throw Error(ErrorCode::zero_denominator, "network has no flows between distinct nodes");
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = marg.out[i] * marg.in[i];
  const double denom = marg.total * marg.total - exact_sum(diag);
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::zero_denominator,
                "F_S^2 equals the sum of out*in strengths; every flow leaves a single node toward itself");
  }
  ExpectedFlowMatrix e;
  e.model = conserving ? ExpectationModel::adjusted_conserving : ExpectationModel::adjusted_paper;
  e.expected = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double third = conserving ? marg.total : f(i, j);
      e.expected(i, j) = marg.out[i] * marg.in[j] * third / denom;
    }
  }
  return e;
}

}  // namespace detail

/// Doubly constrained gravity model balanced by alternating updates of the
/// origin (A) and destination (B) factors starting from B = 1. Nodes with a
/// zero marginal get a zero factor and drop out of the opposite sums.
inline ExpectedFlowMatrix gravity_expectation(const std::vector<double>& origin_totals,
                                              const std::vector<double>& dest_totals,
                                              const SquareMatrix& distances, const GravityOptions& opt = {}) {
  const auto n = origin_totals.size();
  if (dest_totals.size() != n || distances.size() != n) {
    throw Error(ErrorCode::invalid_argument, "marginal and distance sizes disagree");
  }
  if (!(opt.beta > 0.0) || !std::isfinite(opt.beta)) {
    throw Error(ErrorCode::invalid_argument, "beta must be a positive finite number");
  }
  SquareMatrix decay(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = distances(i, j);
      if (!(d > 0.0) || !std::isfinite(d)) {
        throw Error(ErrorCode::zero_distance, "distance between nodes " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " is not strictly positive");
      }
      decay(i, j) = std::pow(d, -opt.beta);
    }
  }

  std::vector<double> a(n, 0.0), b(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(dest_totals[j] > 0.0)) b[j] = 0.0;
  }

  auto fill = [&](SquareMatrix& e) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        e(i, j) = i == j ? 0.0 : a[i] * origin_totals[i] * b[j] * dest_totals[j] * decay(i, j);
      }
    }
  };
  auto residual_of = [&](const SquareMatrix& e) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += e(i, j);
        col += e(j, i);
      }
      if (origin_totals[i] > 0.0) worst = std::max(worst, std::fabs(row - origin_totals[i]) / origin_totals[i]);
      if (dest_totals[i] > 0.0) worst = std::max(worst, std::fabs(col - dest_totals[i]) / dest_totals[i]);
    }
    return worst;
  };

  ExpectedFlowMatrix result;
  result.model = ExpectationModel::gravity;
  result.expected = SquareMatrix(n);
  GravityDiagnostics diag;
  diag.beta = opt.beta;
  double residual = INFINITY;
  int it = 0;
  bool stalled = false;
  while (it < opt.max_iterations) {
    ++it;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(origin_totals[i] > 0.0)) {
        a[i] = 0.0;
        continue;
      }
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += b[j] * dest_totals[j] * decay(i, j);
      }
      if (!(s > 0.0)) {
        stalled = true;
        a[i] = 0.0;
      } else {
        a[i] = 1.0 / s;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(dest_totals[j] > 0.0)) {
        b[j] = 0.0;
        continue;
      }
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) s += a[i] * origin_totals[i] * decay(i, j);
      }
      if (!(s > 0.0)) {
        stalled = true;
        b[j] = 0.0;
      } else {
        b[j] = 1.0 / s;
      }
    }
    fill(result.expected);
    residual = residual_of(result.expected);
    if (residual < opt.tolerance || stalled) break;
  }
  diag.a = a;
  diag.b = b;
  diag.iterations = it;
  diag.residual = residual;
  result.gravity = std::move(diag);
  if (!(residual < opt.tolerance)) {
    throw NoConvergenceError("gravity model did not converge after " + std::to_string(it) +
                                 " iterations (residual " + format_shortest(residual) + ")",
                             std::move(result));
  }
  return result;
}

/// Expected flows under the chosen null model. `distances` is only used by
/// the gravity model; when absent, great-circle kilometres between node
/// coordinates are used.
inline ExpectedFlowMatrix expected_flows(const FlowNetwork& network, ExpectationModel model,
                                         std::optional<double> beta = std::nullopt,
                                         const std::optional<SquareMatrix>& distances = std::nullopt) {
  switch (model) {
    case ExpectationModel::adjusted_paper: return detail::adjusted_expectation(network, false);
    case ExpectationModel::adjusted_conserving: return detail::adjusted_expectation(network, true);
    case ExpectationModel::gravity: break;
  }
  const auto f = observed_matrix(network);
  const auto marg = detail::off_diagonal_marginals(f);
  if (!(marg.total > 0.0)) {
    throw Error(ErrorCode::zero_denominator, "network has no flows between distinct nodes");
  }
  GravityOptions opt;
  if (beta) opt.beta = *beta;
  const auto d = distances ? *distances : great_circle_km(network.nodes());
  if (d.size() != network.nodes().size()) {
    throw Error(ErrorCode::invalid_argument, "distance matrix size does not match node count");
  }
  return gravity_expectation(marg.out, marg.in, d, opt);
}

// ---------------------------------------------------------------------------
// Modularity

struct ModularityFlow {
  std::string origin_id;
  std::string dest_id;
  double observed = 0.0;
  double expected = 0.0;
  double modularity = 0.0;  // observed - expected
};

/// Observed minus expected for every ordered pair of distinct nodes, in node
/// order. Pairs where both observed and expected are zero are omitted.
inline std::vector<ModularityFlow> modularity_transform(const FlowNetwork& network,
                                                        const ExpectedFlowMatrix& expected) {
  const auto f = observed_matrix(network);
  const auto n = f.size();
  if (expected.expected.size() != n) {
    throw Error(ErrorCode::invalid_argument, "expected matrix does not cover the network's nodes");
  }
  std::vector<ModularityFlow> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double obs = f(i, j);
      const double exp = expected.expected(i, j);
      if (obs == 0.0 && exp == 0.0) continue;
      out.push_back({network.nodes()[i].id, network.nodes()[j].id, obs, exp, obs - exp});
    }
  }
  return out;
}

inline std::string modularity_csv(const std::vector<ModularityFlow>& rows) {
  AttributeTable t;
  t.header = {"origin_id", "dest_id", "observed", "expected", "modularity"};
  for (const auto& r : rows) {
    t.rows.push_back({r.origin_id, r.dest_id, format_shortest(r.observed), format_shortest(r.expected),
                      format_shortest(r.modularity)});
  }
  return write_csv(t);
}

// ---------------------------------------------------------------------------
// Filters

/// The n largest flows by value; ties go to the lexicographically smaller
/// (origin, dest). Output is in that rank order.
inline std::vector<FlowRecord> filter_top_n(std::vector<FlowRecord> flows, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "top-n count must be at least 1");
  std::stable_sort(flows.begin(), flows.end(), [](const FlowRecord& x, const FlowRecord& y) {
    if (x.value != y.value) return x.value > y.value;
    if (x.origin_id != y.origin_id) return x.origin_id < y.origin_id;
    return x.dest_id < y.dest_id;
  });
  if (n < flows.size()) flows.resize(n);
  return flows;
}

struct FlowPartition {
  std::vector<FlowRecord> incident;
  std::vector<FlowRecord> other;
};

inline FlowPartition incident_flows(const std::vector<FlowRecord>& flows, std::string_view node_id) {
  FlowPartition p;
  for (const auto& f : flows) {
    if (f.origin_id == node_id || f.dest_id == node_id) p.incident.push_back(f);
    else p.other.push_back(f);
  }
  return p;
}

}  // namespace odflow
