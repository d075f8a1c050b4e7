#include "cli/report.hpp"

#include "cf/error.hpp"
#include "cli/artifacts.hpp"
#include "cli/suites.hpp"

namespace cfcli {

nlohmann::json report_bundle(const std::filesystem::path& dir) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& info : suite_registry()) {
    const auto file = dir / ("suite_" + info.name + ".json");
    nlohmann::json entry{{"suite", info.name}, {"title", info.title}};
    if (!std::filesystem::exists(file)) {
      entry["status"] = "SKIPPED";
      entry["reason"] = "no artifact";
    } else {
      try {
        const auto j = read_json(file);
        entry["status"] = j.at("status");
        entry["observed"] = j.at("observed");
        entry["thresholds"] = j.at("thresholds");
      } catch (const std::exception& e) {
        entry["status"] = "SKIPPED";
        entry["reason"] = e.what();
      }
    }
    entries.push_back(entry);
  }
  nlohmann::json bundle{{"suites", entries}};
  const auto counts = count_status(bundle);
  bundle["counts"] = {{"pass", counts.pass}, {"fail", counts.fail}, {"skipped", counts.skipped}};
  return bundle;
}

BundleCounts count_status(const nlohmann::json& bundle) {
  BundleCounts c;
  for (const auto& e : bundle.at("suites")) {
    const auto s = e.at("status").get<std::string>();
    if (s == "PASS") ++c.pass;
    else if (s == "FAIL") ++c.fail;
    else ++c.skipped;
  }
  return c;
}

}  // namespace cfcli
