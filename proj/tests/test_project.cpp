#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "odflow/project.hpp"
#include "odflow/scene.hpp"

using namespace odflow;

namespace {

const char* const kFixtures[] = {"banana/banana.project.json", "stations/stations.project.json",
                                 "world/world.project.json"};

ErrorCode load_error(const std::string& text) {
  try {
    load_project(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::invalid_argument;
}

nlohmann::ordered_json banana_json() { return nlohmann::ordered_json::parse(read_fixture(kFixtures[0])); }

}  // namespace

TEST(Project, SaveLoadRoundTripRendersIdentically) {
  for (const char* rel : kFixtures) {
    const auto original = load_project(read_fixture(rel));
    const auto saved = save_project(original);
    const auto reloaded = load_project(saved);
    EXPECT_EQ(reloaded, original) << rel;
    EXPECT_EQ(save_project(reloaded), saved) << rel;
    EXPECT_EQ(render_project(reloaded), render_project(original)) << rel;
  }
}

TEST(Project, DefaultsFillOmittedSections) {
  auto j = banana_json();
  j.erase("map");
  j.erase("layers");
  const auto p = load_project(j.dump());
  EXPECT_EQ(p.map, MapSettings{});
  EXPECT_EQ(p.flows, LayerStyle{});
  EXPECT_EQ(load_project(save_project(p)), p);
}

TEST(Project, VersionIsRequired) {
  auto j = banana_json();
  j.erase("version");
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j["version"] = "2";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j["version"] = 1;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
}

TEST(Project, MalformedDocuments) {
  EXPECT_EQ(load_error("{not json"), ErrorCode::invalid_project);
  EXPECT_EQ(load_error("[]"), ErrorCode::invalid_project);
  auto j = banana_json();
  j["datasets"].erase("flows_csv");
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j = banana_json();
  j["map"]["projection"]["kind"] = "azimuthal";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j = banana_json();
  j["map"]["decimals"] = 9;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j = banana_json();
  j["map"]["dim_factor"] = 1.5;
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j = banana_json();
  j["layers"]["flows"]["flow_style"] = "zigzag";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
  j = banana_json();
  j["layers"]["regions"]["color"]["scheme"] = "NoSuchScheme";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::invalid_project);
}

TEST(Project, BadJoinColumnIsReported) {
  auto j = banana_json();
  j["joins"]["flow_value_column"] = "Tonnes";
  try {
    load_project(j.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unresolved_join);
    EXPECT_NE(std::string(e.what()).find("Tonnes"), std::string::npos);
    ASSERT_FALSE(e.details().empty());
    bool lists_value = false;
    for (const auto& d : e.details()) lists_value |= d.find("Value") != std::string::npos;
    EXPECT_TRUE(lists_value);
  }
  j = banana_json();
  j["joins"]["attribute_id_column"] = "ISO";
  EXPECT_EQ(load_error(j.dump()), ErrorCode::unresolved_join);
}

TEST(Project, RegionPropertyJoinIsCheckedOnResolve) {
  auto p = load_project(read_fixture(kFixtures[0]));
  p.joins.region_id_property = "NoSuchProperty";
  try {
    resolve_project(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unresolved_join);
  }
  const auto r = resolve_project(load_project(read_fixture(kFixtures[0])));
  ASSERT_TRUE(r.region_join);
  EXPECT_EQ(r.region_join->matched, 9u);
  EXPECT_EQ(r.network.nodes().size(), 9u);
  EXPECT_EQ(r.network.flows().size(), 11u);
}
