#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cf/error.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

// Settings shared by every subcommand, kept as text and applied over the config file.
struct SharedFlags {
  std::string config;
  std::map<std::string, std::string> values;

  void attach(CLI::App* sub) {
    sub->add_option("--config", config, "flat key=value run configuration");
    for (const char* key : {"domain", "d", "rho", "beta", "gamma", "mu", "seed", "out_dir", "tol_cubature",
                            "tol_parseval", "tol_quadrature", "n_list", "eps_list", "theta_list"}) {
      std::string flag = std::string("--") + key;
      for (auto& c : flag) c = c == '_' ? '-' : c;
      sub->add_option(flag, values[key]);
    }
  }

  cfcli::RunConfig resolve() const {
    cfcli::RunConfig cfg = config.empty() ? cfcli::RunConfig{} : cfcli::load_config(config);
    for (const auto& [key, value] : values) {
      if (!value.empty()) cfcli::apply_setting(cfg, key, value);
    }
    cfcli::validate(cfg);
    return cfg;
  }

  bool given(const std::string& key) const { return !values.at(key).empty(); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conicf: localized kernels, cubature and tight frames on conic domains"};
  app.require_subcommand(1);

  SharedFlags shared;

  cfcli::PointsOptions points;
  auto* points_cmd = app.add_subcommand("points", "build a separated node set");
  shared.attach(points_cmd);
  points_cmd->add_option("--eps", points.eps, "separation radius");
  points_cmd->add_option("--probes", points.probes, "covering probes to report");
  points_cmd->add_option("--out", points.out);

  cfcli::CubatureOptions cub;
  auto* cub_cmd = app.add_subcommand("cubature", "build a positive cubature rule");
  shared.attach(cub_cmd);
  cub_cmd->add_option("--n", cub.n, "polynomial degree");
  cub_cmd->add_option("--delta", cub.delta, "separation parameter; nodes sit delta/n apart");
  cub_cmd->add_option("--out", cub.out);

  cfcli::KernelOptions ker;
  auto* ker_cmd = app.add_subcommand("kernel", "sample a localized kernel along a path");
  shared.attach(ker_cmd);
  ker_cmd->add_option("--n", ker.n);
  ker_cmd->add_option("--cutoff", ker.cutoff, "typeA or typeB");
  ker_cmd->add_option("--center", ker.center, "x1,...,xd,t");
  ker_cmd->add_option("--grid", ker.grid, "number of path samples");
  ker_cmd->add_option("--out", ker.out);

  cfcli::FrameOptions frame;
  auto* frame_cmd = app.add_subcommand("frame", "build a tight frame");
  shared.attach(frame_cmd);
  frame_cmd->add_option("--J", frame.J, "finest level");
  frame_cmd->add_option("--delta", frame.delta);
  frame_cmd->add_option("--out", frame.out);

  cfcli::ApproxOptions approx;
  std::string approx_n;
  auto* approx_cmd = app.add_subcommand("approx", "approximation errors and smoothness gauges");
  shared.attach(approx_cmd);
  approx_cmd->add_option("--f", approx.function, "analytic, abs_t or bump");
  approx_cmd->add_option("--N", approx.N, "projection degree");
  approx_cmd->add_option("--n", approx_n, "comma-separated degrees");
  approx_cmd->add_option("--r", approx.r, "smoothness order");
  approx_cmd->add_option("--out", approx.out);

  cfcli::VerifyOptions verify;
  std::string verify_frame;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  shared.attach(verify_cmd);
  verify_cmd->add_option("suite", verify.suite, "suite name or 'all'");
  verify_cmd->add_option("--frame", verify_frame, "frame artifact to check instead of the defaults");
  verify_cmd->add_option("--trials", verify.trials);

  cfcli::ReportOptions report;
  std::string report_out;
  auto* report_cmd = app.add_subcommand("report", "aggregate suite results");
  report_cmd->add_option("--dir", report.dir, "run directory holding suite_*.json");
  report_cmd->add_option("--out", report_out, "summary path (default <dir>/summary.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cfcli::kExitConfig;
  }

  try {
    if (report_cmd->parsed()) {
      if (!report_out.empty()) report.out = report_out;
      return cfcli::run_report(report);
    }
    cfcli::RunConfig cfg = shared.resolve();
    if (points_cmd->parsed()) return cfcli::run_points(cfg, points);
    if (cub_cmd->parsed()) return cfcli::run_cubature(cfg, cub);
    if (ker_cmd->parsed()) {
      cfg.w = cfcli::kernel_weight(cfg, shared.given("beta"));
      return cfcli::run_kernel(cfg, ker);
    }
    if (frame_cmd->parsed()) return cfcli::run_frame(cfg, frame);
    if (approx_cmd->parsed()) {
      if (!approx_n.empty()) approx.n_list = cfcli::parse_list<int>(approx_n);
      return cfcli::run_approx(cfg, approx);
    }
    if (verify_cmd->parsed()) {
      if (!verify_frame.empty()) verify.frame = verify_frame;
      return cfcli::run_verify(cfg, verify);
    }
  } catch (const cf::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cfcli::kExitConfig;
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cfcli::kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cfcli::kExitNumeric;
  }
  return 0;
}
