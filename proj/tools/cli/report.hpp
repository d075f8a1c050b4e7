/// \file report.hpp
/// \brief Aggregation of suite artifacts into one summary document.
#pragma once

#include <filesystem>

#include "json.hpp"

namespace cfcli {

/// Reads suite_<name>.json for every registered suite in dir; absent or
/// unreadable files are listed as SKIPPED. Entries follow registry order.
nlohmann::json report_bundle(const std::filesystem::path& dir);

/// Counts of PASS, FAIL and SKIPPED entries in a bundle.
struct BundleCounts {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

BundleCounts count_status(const nlohmann::json& bundle);

}  // namespace cfcli
