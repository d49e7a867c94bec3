#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string fixture_path(const std::string& rel) { return std::string(ODFLOW_FIXTURES) + "/" + rel; }

inline std::string read_fixture(const std::string& rel) {
  std::ifstream in(fixture_path(rel), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
