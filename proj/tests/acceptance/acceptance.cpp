// Runs every verification suite twice under the default configuration and
// prints one PASS/FAIL line per acceptance criterion. Thresholds live in the
// suites themselves; this driver only maps suites to criteria and checks that
// the second run reproduces the first byte for byte.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/artifacts.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"

namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
};

const Criterion kCriteria[] = {
    {1, "addition", "addition formula against basis sum (1e-9)"},
    {2, "reproduction", "localized kernel reproduces random polynomials (1e-9)"},
    {3, "localization", "kernel decay exponent >= 6 and stable weighted L1 bound"},
    {4, "separation", "separated sets: spacing, covering in [1,12], cardinality within 3"},
    {5, "ball_measure", "ball measure against comparison formula, C <= 10"},
    {6, "cubature", "positive cubature: lambda > 0, residual <= 1e-8, mass ratio <= 10"},
    {7, "mz", "MZ ratios vary by at most 3 across n"},
    {8, "parseval", "tight frame Parseval defect and round trip <= 1e-6"},
    {9, "needlet", "needlet decay exponent >= 5 for j = 2..4"},
    {10, "spectral", "spectral eigenrelation deviation <= 1e-3"},
    {11, "jackson", "Jackson bound, omega/K in [1/10, 10], near-best ratio <= 0.9"},
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<cfcli::SuiteResult> run_all(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  cfcli::RunConfig cfg;
  cfg.out_dir = dir;
  std::vector<cfcli::SuiteResult> out;
  for (const auto& info : cfcli::suite_registry()) {
    const auto start = std::chrono::steady_clock::now();
    out.push_back(cfcli::run_suite(info.name, cfg));
    cfcli::write_suite(out.back(), dir);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cerr << "  ran " << info.name << " in " << took.count() << " s\n";
  }
  cfcli::atomic_write(dir / "summary.json", cfcli::dump(cfcli::report_bundle(dir)));
  return out;
}

const cfcli::SuiteResult& find(const std::vector<cfcli::SuiteResult>& all, const std::string& name) {
  for (const auto& r : all) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("suite missing from registry: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "cf_acceptance";
  const auto first = run_all(root / "a");
  const auto second = run_all(root / "b");

  int failures = 0;
  for (const auto& c : kCriteria) {
    const auto& r = find(first, c.suite);
    failures += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.suite << "]: " << c.title << "\n";
    std::cout << "    observed " << r.observed.dump() << "\n";
  }

  bool same = slurp(root / "a" / "summary.json") == slurp(root / "b" / "summary.json");
  for (const auto& info : cfcli::suite_registry()) {
    const std::string file = "suite_" + info.name + ".json";
    same = same && slurp(root / "a" / file) == slurp(root / "b" / file);
  }
  failures += same ? 0 : 1;
  std::cout << (same ? "PASS" : "FAIL") << " criterion 12 [determinism]: report bundle and suite files identical across runs\n";

  const auto& extra = find(first, "christoffel");
  std::cout << "info " << cfcli::summary_line(extra) << "\n";
  std::cout << failures << " of 12 criteria failed\n";
  return failures == 0 ? 0 : 1;
}
