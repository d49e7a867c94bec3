#pragma once

// HTTP service. Requires cpp-httplib, nlohmann/json and OpenSSL libcrypto.

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "odflow/analytics.hpp"
#include "odflow/error.hpp"
#include "odflow/project.hpp"
#include "odflow/scene.hpp"
#include "odflow/tools.hpp"

namespace odflow::shell {

inline constexpr std::size_t kDefaultMaxBody = 50u * 1024u * 1024u;

struct ServiceConfig {
  std::filesystem::path data_dir = "projects";
  std::size_t max_body = kDefaultMaxBody;
  std::string cors_origin = "*";
};

/// Reads ODFLOW_MAX_BODY (bytes) and ODFLOW_CORS_ORIGIN over the defaults.
inline ServiceConfig config_from_env(ServiceConfig base = {}) {
  if (const char* v = std::getenv("ODFLOW_MAX_BODY")) {
    if (auto n = parse_decimal(v); n && *n > 0 && *n == std::floor(*n)) base.max_body = static_cast<std::size_t>(*n);
  }
  if (const char* v = std::getenv("ODFLOW_CORS_ORIGIN")) base.cors_origin = v;
  return base;
}

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

/// Flat directory of project files keyed by the SHA-256 of their bytes.
class ProjectStore {
 public:
  explicit ProjectStore(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  std::string put(std::string_view bytes) {
    const auto id = sha256_hex(bytes);
    const auto target = path_for(id);
    std::ostringstream tmp_name;
    tmp_name << id << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter_++;
    const auto tmp = dir_ / tmp_name.str();
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return id;
  }

  std::optional<std::string> get(std::string_view id) const {
    if (!valid_id(id)) return std::nullopt;
    std::ifstream in(path_for(id), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static bool valid_id(std::string_view id) {
    if (id.size() != 64) return false;
    for (char c : id) {
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
  }

 private:
  std::filesystem::path path_for(std::string_view id) const { return dir_ / (std::string(id) + ".json"); }

  std::filesystem::path dir_;
  std::atomic<unsigned long> counter_{0};
};

inline nlohmann::json error_json(const Error& e) {
  nlohmann::json err = {{"code", std::string(to_string(e.code()))}, {"message", e.message()}, {"details", e.details()}};
  if (e.row()) err["row"] = *e.row();
  return {{"error", err}};
}

inline nlohmann::json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}, {"details", nlohmann::json::array()}}}};
}

namespace detail {

inline void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

/// Runs a handler, mapping library errors to 400 and anything else to 500.
template <class F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const NoConvergenceError& e) {
    auto j = error_json(e);
    if (const auto& g = e.last_iterate().gravity) j["error"]["residual"] = g->residual;
    send_json(res, 400, j);
  } catch (const Error& e) {
    send_json(res, 400, error_json(e));
  } catch (const nlohmann::json::exception& e) {
    send_json(res, 400, error_json("InvalidArgument", e.what()));
  } catch (const std::exception& e) {
    send_json(res, 500, error_json("Internal", e.what()));
  }
}

inline nlohmann::json parse_body(const httplib::Request& req) {
  try {
    return nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::invalid_argument, std::string("request body is not valid JSON: ") + e.what());
  }
}

inline std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) throw Error(ErrorCode::invalid_argument, std::string("'") + key + "' must be a string");
  return j[key].get<std::string>();
}

inline NormalizeRequest normalize_request(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::invalid_argument, "request body must be a JSON object");
  NormalizeRequest r;
  auto flows = optional_string(j, "flows_csv");
  if (!flows) throw Error(ErrorCode::invalid_argument, "'flows_csv' is required");
  r.flows_csv = *flows;
  r.nodes_csv = optional_string(j, "nodes_csv");
  r.distances_csv = optional_string(j, "distances_csv");
  if (auto m = optional_string(j, "model")) {
    auto parsed = parse_expectation_model(*m);
    if (!parsed) throw Error(ErrorCode::invalid_argument, "unknown model '" + *m + "'");
    r.model = *parsed;
  }
  if (j.contains("beta") && !j["beta"].is_null()) {
    if (!j["beta"].is_number()) throw Error(ErrorCode::invalid_argument, "'beta' must be a number");
    r.beta = j["beta"].get<double>();
  }
  if (j.contains("fields")) {
    const auto& f = j["fields"];
    if (!f.is_object()) throw Error(ErrorCode::invalid_argument, "'fields' must be an object");
    for (auto [key, target] : {std::pair{"origin", &r.origin_field}, {"dest", &r.dest_field}, {"value", &r.value_field},
                               {"node_id", &r.node_id_field}, {"node_x", &r.node_x_field},
                               {"node_y", &r.node_y_field}}) {
      if (auto v = optional_string(f, key)) *target = *v;
    }
  }
  return r;
}

}  // namespace detail

/// Registers every endpoint on `server`. The store must outlive the server.
inline void configure_service(httplib::Server& server, ProjectStore& store, const ServiceConfig& config) {
  using detail::guarded;
  using detail::send_json;
  server.set_payload_max_length(config.max_body);
  server.set_default_headers({{"Access-Control-Allow-Origin", config.cors_origin},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, {{"status", "ok"}});
  });

  server.Post("/projects", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      load_project(req.body);
      send_json(res, 201, {{"id", store.put(req.body)}});
    });
  });

  server.Get(R"(/projects/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto id = req.matches[1].str();
    if (auto bytes = store.get(id)) {
      res.status = 200;
      res.set_content(*bytes, "application/json");
    } else {
      send_json(res, 404, error_json("NotFound", "no project with id '" + id + "'"));
    }
  });

  server.Post("/render", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto body = detail::parse_body(req);
      if (!body.is_object()) throw Error(ErrorCode::invalid_argument, "request body must be a JSON object");
      const bool inline_project = body.contains("project");
      const bool by_id = body.contains("project_id");
      if (inline_project == by_id) {
        throw Error(ErrorCode::invalid_argument, "exactly one of 'project' and 'project_id' is required");
      }
      std::string text;
      if (inline_project) {
        text = body["project"].dump();
      } else {
        const auto id = detail::optional_string(body, "project_id").value_or("");
        auto stored = store.get(id);
        if (!stored) {
          send_json(res, 404, error_json("NotFound", "no project with id '" + id + "'"));
          return;
        }
        text = std::move(*stored);
      }
      const auto selection = detail::optional_string(body, "selection");
      std::optional<int> decimals;
      if (body.contains("decimals") && !body["decimals"].is_null()) {
        if (!body["decimals"].is_number_integer()) throw Error(ErrorCode::invalid_argument, "'decimals' must be an integer");
        decimals = body["decimals"].get<int>();
        if (*decimals < 1 || *decimals > 6) throw Error(ErrorCode::invalid_argument, "'decimals' must be in [1, 6]");
      }
      const auto project = load_project(text);
      std::optional<std::string_view> sel;
      if (selection) sel = *selection;
      res.status = 200;
      res.set_content(render_project(project, sel, decimals), "image/svg+xml");
    });
  });

  server.Post("/tools/poly2points", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::optional<std::string> id_property;
      if (req.has_param("id_property")) id_property = req.get_param_value("id_property");
      std::optional<std::string_view> idp;
      if (id_property) idp = *id_property;
      res.status = 200;
      res.set_content(poly2points(req.body, idp), "text/csv");
    });
  });

  server.Post("/tools/normalize", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto request = detail::normalize_request(detail::parse_body(req));
      res.status = 200;
      res.set_content(normalize_flows(request), "text/csv");
    });
  });
}

}  // namespace odflow::shell
