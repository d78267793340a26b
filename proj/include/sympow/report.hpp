// JSON check reports shared by the verification suites and the CLI.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sympow/rational.hpp"

namespace sympow {

struct CheckRecord {
  std::string id;
  std::string identity;  // the identity the check verifies, as a formula string
  nlohmann::json inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
  double millis = 0.0;
};

struct Report {
  std::string tool_name = "sympow";
  std::string tool_version;
  nlohmann::json config;
  std::vector<CheckRecord> records;

  long total() const { return static_cast<long>(records.size()); }
  long passed() const;
  long failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }

  // Records sorted by id; mathematical integers appear as decimal strings.
  nlohmann::json to_json() const;
  void write(const std::string& path) const;
};

std::string tool_version();

}  // namespace sympow
