/// \file suites.hpp
/// \brief Verification suites: each measures one property, records the observed
/// constants and the thresholds it was held to, and reports PASS or FAIL.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "json.hpp"

namespace cfcli {

struct SuiteResult {
  std::string name;
  std::string title;
  bool pass = false;
  nlohmann::json observed = nlohmann::json::object();
  nlohmann::json thresholds = nlohmann::json::object();

  nlohmann::json to_json() const;
  std::string status() const { return pass ? "PASS" : "FAIL"; }
};

/// Optional inputs a suite may take from earlier artifacts instead of building its own.
struct SuiteInputs {
  std::optional<std::filesystem::path> frame;
  int trials = 20;
};

struct SuiteInfo {
  std::string name;
  std::string title;
  SuiteResult (*run)(const RunConfig&, const SuiteInputs&);
};

/// Registry order is the report order.
const std::vector<SuiteInfo>& suite_registry();

/// Throws cf::ParameterError for an unknown name.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg, const SuiteInputs& in = {});

/// Writes suite_<name>.json into dir.
std::filesystem::path write_suite(const SuiteResult& r, const std::filesystem::path& dir);

/// One line: "<STATUS> <name>: <title>".
std::string summary_line(const SuiteResult& r);

}  // namespace cfcli
