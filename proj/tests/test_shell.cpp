#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "odflow/shell/cli.hpp"
#include "odflow/shell/service.hpp"

using namespace odflow;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shell::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("odflow-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return (path_ / name).string();
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string bad_join_project() {
  auto j = nlohmann::ordered_json::parse(read_fixture("banana/banana.project.json"));
  j["joins"]["flow_value_column"] = "Tonnes";
  return j.dump();
}

}  // namespace

TEST(Cli, RenderToStdoutAndFile) {
  const auto r = run({"render", fixture_path("banana/banana.project.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, render_project(load_project(read_fixture("banana/banana.project.json"))));
  TempDir dir;
  const auto target = (dir.path() / "map.svg").string();
  ASSERT_EQ(run({"render", fixture_path("banana/banana.project.json"), "-o", target, "--decimals", "2"}).code, 0);
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  std::size_t flows = 0;
  for (auto p = ss.str().find("class=\"flow\""); p != std::string::npos; p = ss.str().find("class=\"flow\"", p + 1)) {
    ++flows;
  }
  EXPECT_EQ(flows, 11u);
}

TEST(Cli, InputErrorsExitWithTwo) {
  auto r = run({"render", "/definitely/missing.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/definitely/missing.json"), std::string::npos);

  TempDir dir;
  r = run({"render", dir.write("bad.json", bad_join_project())});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnresolvedJoin"), std::string::npos);
  EXPECT_NE(r.err.find("Value"), std::string::npos);  // available columns are listed

  r = run({"render", fixture_path("banana/banana.project.json"), "--select", "nobody"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"render", fixture_path("banana/banana.project.json"), "--decimals", "9"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Poly2Points) {
  auto r = run({"tools", "poly2points", fixture_path("tools/unit_square.geojson"), "--id-property", "id"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "id,X,Y\nsq,0.5,0.5\n");
  r = run({"tools", "poly2points", fixture_path("tools/zero_area.geojson")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateGeometry"), std::string::npos);
}

TEST(Cli, Normalize) {
  auto r = run({"tools", "normalize", "--flows", fixture_path("tools/four_flows.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("A,B,4,1.25,2.75\n"), std::string::npos);

  r = run({"tools", "normalize", "--flows", fixture_path("tools/four_flows.csv"), "--model", "gravity"});
  EXPECT_EQ(r.code, 2);
  // The marginals force E(B,C) = 0, which positive balancing factors only
  // reach in the limit.
  r = run({"tools", "normalize", "--flows", fixture_path("tools/four_flows.csv"), "--nodes",
           fixture_path("tools/four_nodes.csv"), "--model", "gravity"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NoConvergence"), std::string::npos);
  EXPECT_NE(r.err.find("residual"), std::string::npos);
  r = run({"tools", "normalize", "--flows", fixture_path("tools/four_flows.csv"), "--model", "poisson"});
  EXPECT_EQ(r.code, 2);

  TempDir dir;
  const auto full = dir.write("f.csv", "origin,dest,value\nA,B,4\nB,A,2\nA,C,1\nC,A,3\nB,C,2\nC,B,1\n");
  r = run({"tools", "normalize", "--flows", full, "--nodes", fixture_path("tools/four_nodes.csv"), "--model",
           "gravity", "--beta", "1.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto dist = dir.write("d.csv", "origin_id,dest_id,distance\nA,B,1\nA,C,2\nB,C,3\n");
  r = run({"tools", "normalize", "--flows", full, "--model", "gravity", "--distances", dist});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto partial = dir.write("p.csv", "origin_id,dest_id,distance\nA,B,1\n");
  r = run({"tools", "normalize", "--flows", full, "--model", "gravity", "--distances", partial});
  EXPECT_EQ(r.code, 2);
}

class Service : public ::testing::Test {
 protected:
  void SetUp() override {
    store_ = std::make_unique<shell::ProjectStore>(dir_.path() / "store");
    shell::ServiceConfig config;
    config.data_dir = dir_.path() / "store";
    config.max_body = 4u * 1024u * 1024u;
    shell::configure_service(server_, *store_, config);
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(30, 0);
    return c;
  }

  TempDir dir_;
  std::unique_ptr<shell::ProjectStore> store_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(Service, Health) {
  auto res = client().Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["status"], "ok");
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(Service, ProjectStoreRoundTrip) {
  const auto text = read_fixture("banana/banana.project.json");
  auto c = client();
  auto res = c.Post("/projects", text, "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 201) << res->body;
  const auto id = nlohmann::json::parse(res->body)["id"].get<std::string>();
  EXPECT_EQ(id, shell::sha256_hex(text));
  auto got = c.Get("/projects/" + id);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(got->body, text);
  EXPECT_EQ(c.Get("/projects/" + std::string(64, '0'))->status, 404);
  EXPECT_EQ(c.Get("/projects/../../etc/passwd")->status, 404);

  auto bad = c.Post("/projects", bad_join_project(), "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(nlohmann::json::parse(bad->body)["error"]["code"], "UnresolvedJoin");
}

TEST_F(Service, RenderMatchesCli) {
  const auto path = fixture_path("banana/banana.project.json");
  const auto cli = run({"render", path});
  ASSERT_EQ(cli.code, 0);
  auto c = client();

  nlohmann::json body{{"project", nlohmann::json::parse(read_fixture("banana/banana.project.json"))}};
  auto res = c.Post("/render", body.dump(), "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(res->get_header_value("Content-Type"), "image/svg+xml");
  EXPECT_EQ(res->body, cli.out);

  const auto id = nlohmann::json::parse(c.Post("/projects", read_fixture("banana/banana.project.json"),
                                               "application/json")->body)["id"].get<std::string>();
  res = c.Post("/render", nlohmann::json{{"project_id", id}, {"selection", "21"}}.dump(), "application/json");
  ASSERT_EQ(res->status, 200);
  EXPECT_EQ(res->body, run({"render", path, "--select", "21"}).out);

  res = c.Post("/render", nlohmann::json{{"project_id", id}, {"decimals", 9}}.dump(), "application/json");
  EXPECT_EQ(res->status, 400);
  res = c.Post("/render", nlohmann::json{{"project_id", std::string(64, 'a')}}.dump(), "application/json");
  EXPECT_EQ(res->status, 404);
  res = c.Post("/render", "{}", "application/json");
  EXPECT_EQ(res->status, 400);
  res = c.Post("/render", "{oops", "application/json");
  ASSERT_EQ(res->status, 400);
  const auto err = nlohmann::json::parse(res->body)["error"];
  EXPECT_EQ(err["code"], "InvalidArgument");
  EXPECT_TRUE(err["details"].is_array());
}

TEST_F(Service, OversizeBodyIsRejected) {
  const std::string big(5u * 1024u * 1024u, 'x');
  auto res = client().Post("/projects", big, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 413);
}

TEST_F(Service, Tools) {
  auto c = client();
  auto res = c.Post("/tools/poly2points?id_property=id", read_fixture("tools/unit_square.geojson"),
                    "application/geo+json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "id,X,Y\nsq,0.5,0.5\n");
  res = c.Post("/tools/poly2points", read_fixture("tools/zero_area.geojson"), "application/geo+json");
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(nlohmann::json::parse(res->body)["error"]["code"], "DegenerateGeometry");

  nlohmann::json req{{"flows_csv", read_fixture("tools/four_flows.csv")}};
  res = c.Post("/tools/normalize", req.dump(), "application/json");
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(res->get_header_value("Content-Type"), "text/csv");
  EXPECT_NE(res->body.find("A,B,4,1.25,2.75\n"), std::string::npos);
  req["model"] = "gravity";
  res = c.Post("/tools/normalize", req.dump(), "application/json");
  EXPECT_EQ(res->status, 400);
  req["nodes_csv"] = read_fixture("tools/four_nodes.csv");
  res = c.Post("/tools/normalize", req.dump(), "application/json");
  ASSERT_EQ(res->status, 400);
  const auto err = nlohmann::json::parse(res->body)["error"];
  EXPECT_EQ(err["code"], "NoConvergence");
  EXPECT_TRUE(err["residual"].is_number());
  req["flows_csv"] = "origin,dest,value\nA,B,4\nB,A,2\nA,C,1\nC,A,3\nB,C,2\nC,B,1\n";
  req["fields"] = {{"node_x", "X"}};
  res = c.Post("/tools/normalize", req.dump(), "application/json");
  EXPECT_EQ(res->status, 200) << res->body;
}

TEST(ProjectStore, ContentAddressed) {
  TempDir dir;
  shell::ProjectStore store(dir.path());
  const auto id = store.put("abc");
  EXPECT_EQ(id, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(store.put("abc"), id);
  EXPECT_EQ(store.get(id), "abc");
  EXPECT_FALSE(store.get("ABC"));
  EXPECT_FALSE(shell::ProjectStore::valid_id(std::string(63, 'a')));
}
