#pragma once

// Batch command line. Requires CLI11; `serve` additionally needs the service
// dependencies.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odflow/analytics.hpp"
#include "odflow/error.hpp"
#include "odflow/project.hpp"
#include "odflow/scene.hpp"
#include "odflow/shell/service.hpp"
#include "odflow/tools.hpp"

namespace odflow::shell {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitInternal = 3 };

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot write file '" + path + "'");
}

inline void print_error(std::ostream& err, const Error& e) {
  err << "error: " << e.what();
  if (e.row()) err << " (row " << *e.row() << ")";
  err << '\n';
  for (const auto& d : e.details()) err << "  " << d << '\n';
}

/// Entry point shared by the executable and the tests. Never throws.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Origin-destination flow map engine", "odflow"};
  app.require_subcommand(1);

  std::string project_path, out_path, selection;
  std::optional<int> decimals;
  auto* render = app.add_subcommand("render", "Render a project file to SVG");
  render->add_option("project", project_path, "Project JSON file")->required();
  render->add_option("-o,--output", out_path, "Output SVG path (stdout when omitted)");
  render->add_option("--select", selection, "Highlight flows incident to this node id");
  render->add_option("--decimals", decimals, "Coordinate decimals")->check(CLI::Range(1, 6));

  auto* tools = app.add_subcommand("tools", "Data preparation tools");
  tools->require_subcommand(1);

  std::string geojson_path, id_property;
  auto* p2p = tools->add_subcommand("poly2points", "Polygon GeoJSON to a point CSV of centroids");
  p2p->add_option("geojson", geojson_path, "GeoJSON FeatureCollection")->required();
  p2p->add_option("-o,--output", out_path, "Output CSV path (stdout when omitted)");
  p2p->add_option("--id-property", id_property, "Feature property used as the id");

  NormalizeRequest nreq;
  std::string flows_path, nodes_path, distances_path, model = "adjusted-paper";
  std::optional<double> beta;
  auto* norm = tools->add_subcommand("normalize", "Observed, expected and modularity flows");
  norm->add_option("--flows", flows_path, "Flow CSV")->required();
  norm->add_option("--nodes", nodes_path, "Node CSV with coordinates");
  norm->add_option("--model", model, "Expectation model")
      ->check(CLI::IsMember({"adjusted-paper", "adjusted-conserving", "gravity"}));
  norm->add_option("--beta", beta, "Gravity distance-decay exponent");
  norm->add_option("--distances", distances_path, "Distance CSV (origin_id, dest_id, distance)");
  norm->add_option("-o,--output", out_path, "Output CSV path (stdout when omitted)");
  norm->add_option("--origin-field", nreq.origin_field, "Flow origin column");
  norm->add_option("--dest-field", nreq.dest_field, "Flow destination column");
  norm->add_option("--value-field", nreq.value_field, "Flow value column");
  norm->add_option("--node-id-field", nreq.node_id_field, "Node id column");
  norm->add_option("--node-x-field", nreq.node_x_field, "Node longitude column");
  norm->add_option("--node-y-field", nreq.node_y_field, "Node latitude column");

  int port = 8080;
  std::string host = "0.0.0.0";
  std::string data_dir = "projects";
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port, "Listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--data-dir", data_dir, "Project store directory");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*render) {
      const auto project = load_project(read_file(project_path));
      std::optional<std::string_view> sel;
      if (!selection.empty()) sel = selection;
      write_output(out_path, render_project(project, sel, decimals), out);
    } else if (*p2p) {
      std::optional<std::string_view> idp;
      if (!id_property.empty()) idp = id_property;
      write_output(out_path, poly2points(read_file(geojson_path), idp), out);
    } else if (*norm) {
      nreq.flows_csv = read_file(flows_path);
      if (!nodes_path.empty()) nreq.nodes_csv = read_file(nodes_path);
      if (!distances_path.empty()) nreq.distances_csv = read_file(distances_path);
      nreq.model = *parse_expectation_model(model);
      nreq.beta = beta;
      write_output(out_path, normalize_flows(nreq), out);
    } else if (*serve) {
      const auto config = config_from_env(ServiceConfig{data_dir});
      ProjectStore store(config.data_dir);
      httplib::Server server;
      configure_service(server, store, config);
      err << "listening on " << host << ":" << port << '\n';
      if (!server.listen(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << '\n';
        return kExitInput;
      }
    }
  } catch (const NoConvergenceError& e) {
    print_error(err, e);
    if (const auto& g = e.last_iterate().gravity) {
      err << "  residual " << format_shortest(g->residual) << " after " << g->iterations << " iterations\n";
    }
    return kExitInput;
  } catch (const Error& e) {
    print_error(err, e);
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace odflow::shell
