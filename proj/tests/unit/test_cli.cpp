#include <filesystem>
#include <fstream>
#include <sstream>

#include "cf/error.hpp"
#include "cli/artifacts.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace cfcli;

namespace {

// Fresh directory under the system temp path, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("cf_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig cfg = parse_config(
      "# run\n"
      "domain = solid\n"
      "rho = 0.25\n"
      "beta=0.5\n"
      "gamma = 1   # trailing comment\n"
      "n_list = 4, 8,16\n"
      "eps_list = 0.2,0.1\n"
      "tol_parseval = 1e-8\n"
      "seed = 42\n");
  CHECK(cfg.dom.kind == cf::DomainKind::Solid);
  CHECK(cfg.dom.rho == 0.25);
  CHECK(cfg.w.beta == 0.5);
  CHECK(cfg.w.gamma == 1.0);
  CHECK(cfg.n_list == std::vector<int>{4, 8, 16});
  CHECK(cfg.eps_list == std::vector<double>{0.2, 0.1});
  CHECK(cfg.tol_parseval == 1e-8);
  CHECK(cfg.seed == 42);
  CHECK(cfg.tol_cubature == 1e-10);

  CHECK_THROWS_AS(parse_config("colour = red\n"), cf::ParameterError);
  CHECK_THROWS_AS(parse_config("rho = abc\n"), cf::ParameterError);
  CHECK_THROWS_AS(parse_config("domain = sphere\n"), cf::ParameterError);
  CHECK_THROWS_AS(parse_config("rho\n"), cf::ParameterError);
  CHECK_THROWS_AS(parse_list<int>("1,,2"), cf::ParameterError);

  RunConfig bad;
  bad.tol_cubature = 0.0;
  CHECK_THROWS_AS(validate(bad), cf::ParameterError);
  bad = RunConfig{};
  bad.w.gamma = -1.0;
  CHECK_THROWS_AS(validate(bad), cf::ParameterError);
  CHECK(domain_name(parse_domain("surface")) == "surface");
}

TEST_CASE("kernel weight defaults") {
  RunConfig cfg;
  cfg.w.beta = 0.7;
  CHECK(kernel_weight(cfg, false).beta == 0.0);
  CHECK(kernel_weight(cfg, true).beta == 0.7);
  cfg.dom.kind = cf::DomainKind::Solid;
  CHECK(kernel_weight(cfg, false).beta == 0.5);
}

TEST_CASE("centre parsing and kernel path") {
  const cf::Domain dom{cf::DomainKind::Surface, 2, 0.0};
  const cf::Point p = parse_point(dom, "0.3,0.4,0.5");
  CHECK(p.t == 0.5);
  CHECK_THROWS_AS(parse_point(dom, "0.3,0.4"), cf::ParameterError);
  CHECK_THROWS_AS(parse_point(dom, "0.3,0.4,0.9"), cf::DomainError);
  const auto path = kernel_path(dom, p, 50);
  REQUIRE(path.size() == 50);
  CHECK(path.front().t == doctest::Approx(p.t));
  CHECK(cf::distance(dom, p, path.front()) < 1e-7);
  for (const auto& q : path) CHECK(cf::on_domain(dom, q, 1e-12));
  const cf::Domain solid{cf::DomainKind::Solid, 2, 0.5};
  for (const auto& q : kernel_path(solid, cf::Point({0.1, 0.0}, -0.8), 20)) {
    CHECK(cf::on_domain(solid, q, 1e-12));
    CHECK(q.t < 0.0);
  }
  CHECK_THROWS_AS(kernel_path(dom, p, 1), cf::ParameterError);
}

TEST_CASE("artifacts round-trip exactly") {
  TempDir dir("artifacts");
  const cf::Domain dom{cf::DomainKind::Surface, 2, 0.5};
  const cf::SeparatedSet s = cf::build_separated(dom, 0.3);
  save_artifact(dir.path / "s.json", "separated_set", s);
  CHECK(load_artifact<cf::SeparatedSet>(dir.path / "s.json", "separated_set") == s);
  CHECK_THROWS_AS(load_artifact<cf::CubatureRule>(dir.path / "s.json", "cubature"), cf::ParameterError);

  const cf::Weight w{0.0, 1.0, 0.0};
  const cf::Frame fr = cf::build_frame({cf::DomainKind::Surface, 2, 0.0}, w, 2, 1.0);
  save_artifact(dir.path / "f.json", "frame", fr);
  CHECK(load_artifact<cf::Frame>(dir.path / "f.json", "frame") == fr);
  save_artifact(dir.path / "c.json", "cubature", fr.levels.back().rule);
  CHECK(load_artifact<cf::CubatureRule>(dir.path / "c.json", "cubature") == fr.levels.back().rule);

  for (const auto& e : fs::directory_iterator(dir.path)) CHECK(e.path().extension() != ".tmp");
  const std::string bytes = slurp(dir.path / "f.json");
  save_artifact(dir.path / "f.json", "frame", load_artifact<cf::Frame>(dir.path / "f.json", "frame"));
  CHECK(slurp(dir.path / "f.json") == bytes);
}

TEST_CASE("report over an empty directory skips every suite") {
  TempDir dir("report");
  const auto bundle = report_bundle(dir.path);
  const BundleCounts c = count_status(bundle);
  CHECK(c.skipped == static_cast<int>(suite_registry().size()));
  CHECK(c.pass == 0);
  CHECK(c.fail == 0);
  CHECK(suite_registry().size() == 12);
}

TEST_CASE("a suite result is written and reported") {
  TempDir dir("suite");
  RunConfig cfg;
  cfg.out_dir = dir.path;
  const SuiteResult r = run_suite("addition", cfg, SuiteInputs{});
  CHECK(r.pass);
  write_suite(r, dir.path);
  CHECK(fs::exists(dir.path / "suite_addition.json"));
  const BundleCounts c = count_status(report_bundle(dir.path));
  CHECK(c.pass == 1);
  CHECK(c.skipped == 11);
  CHECK_THROWS_AS(run_suite("nonsense", cfg, SuiteInputs{}), cf::ParameterError);
}
