#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cf/approx.hpp"
#include "cf/error.hpp"
#include "cf/frames.hpp"
#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"
#include "cli/artifacts.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"

namespace cfcli {

namespace {

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

cf::PointFunction test_function(const std::string& name) {
  if (name == "analytic") return [](const cf::Point& p) { return std::exp(p.x[0] + p.t * p.t); };
  if (name == "abs_t") return [](const cf::Point& p) { return std::abs(p.t); };
  if (name == "bump") {
    return [](const cf::Point& p) {
      const double a = p.x[0] - 0.3, b = p.x[1], c = std::abs(p.t) - 0.5;
      return std::exp(-(a * a + b * b + c * c) / 0.1);
    };
  }
  throw cf::ParameterError("function must be analytic, abs_t or bump");
}

cf::Cutoff parse_cutoff(const std::string& name) {
  if (name == "typeA") return {cf::CutoffKind::TypeA};
  if (name == "typeB") return {cf::CutoffKind::TypeB};
  throw cf::ParameterError("cutoff must be typeA or typeB");
}

}  // namespace

cf::Weight kernel_weight(const RunConfig& cfg, bool beta_given) {
  cf::Weight w = cfg.w;
  if (!beta_given) w.beta = cfg.dom.kind == cf::DomainKind::Surface ? 0.0 : 0.5;
  return w;
}

cf::Point parse_point(const cf::Domain& dom, const std::string& text) {
  const auto v = parse_list<double>(text);
  if (v.size() != static_cast<std::size_t>(dom.d) + 1) {
    throw cf::ParameterError("centre needs " + std::to_string(dom.d + 1) + " coordinates");
  }
  const cf::Point p(std::span<const double>(v.data(), v.size() - 1), v.back());
  cf::require_on_domain(dom, p, 1e-9);
  return p;
}

std::vector<cf::Point> kernel_path(const cf::Domain& dom, const cf::Point& centre, int grid) {
  if (grid < 2) throw cf::ParameterError("grid needs at least 2 points");
  const double sign = centre.t < 0.0 ? -1.0 : 1.0;
  const double s0 = std::sqrt(std::max(0.0, centre.t * centre.t - dom.rho * dom.rho));  // radius of the slice
  const double r0 = std::sqrt(centre.norm2());
  const double rel = dom.kind == cf::DomainKind::Surface || s0 == 0.0 ? 1.0 : std::min(1.0, r0 / s0);
  const double phi0 = r0 > 0.0 ? std::atan2(centre.dim > 1 ? centre.x[1] : 0.0, centre.x[0]) : 0.0;
  const double s1 = s0 >= 0.5 ? 0.0 : 1.0;
  std::vector<cf::Point> path;
  path.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double tau = static_cast<double>(i) / (grid - 1);
    const double s = s0 + (s1 - s0) * tau;
    const double phi = phi0 + std::numbers::pi * tau;
    std::vector<double> x(static_cast<std::size_t>(dom.d), 0.0);
    x[0] = rel * s * std::cos(phi);
    if (dom.d > 1) x[1] = rel * s * std::sin(phi);
    path.emplace_back(x, sign * std::sqrt(s * s + dom.rho * dom.rho));
  }
  return path;
}

int run_points(const RunConfig& cfg, const PointsOptions& o) {
  const cf::SeparatedSet s = cf::build_separated(cfg.dom, o.eps);
  save_artifact(o.out, "separated_set", s);
  std::cout << "points: " << s.N << " bands, " << s.size() << " nodes, eps " << o.eps << " -> " << o.out.string()
            << "\n";
  if (o.probes > 0) {
    const cf::SeparationReport rep = cf::verify_separated(s, o.probes);
    std::cout << "min distance " << rep.min_distance << ", multiplicity [" << rep.min_multiplicity << ", "
              << rep.max_multiplicity << "], symmetric " << (rep.evenly_symmetric ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_cubature(const RunConfig& cfg, const CubatureOptions& o) {
  const cf::CubatureRule rule = cf::cubature_build(cfg.dom, cfg.w, o.n, o.delta, cfg.tol_cubature);
  save_artifact(o.out, "cubature_rule", rule);
  std::cout << "cubature: degree " << rule.degree << ", " << rule.size() << " nodes, delta " << rule.delta
            << ", residual " << rule.residual << " -> " << o.out.string() << "\n";
  return 0;
}

int run_kernel(const RunConfig& cfg, const KernelOptions& o) {
  const cf::Point centre = o.center.empty() ? cf::Point({0.5, 0.0}, 0.5) : parse_point(cfg.dom, o.center);
  const cf::KernelSeries kernel(cf::make_kernel_context(cfg.dom, cfg.w, 2 * o.n),
                                cf::localized_coefficients(o.n, parse_cutoff(o.cutoff)));
  std::ostringstream csv;
  csv << "index";
  for (int i = 0; i < cfg.dom.d; ++i) csv << ",x" << i + 1;
  csv << ",t,distance,kernel,normalized\n";
  const auto path = kernel_path(cfg.dom, centre, o.grid);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const cf::Point& q = path[i];
    const double k = kernel(centre, q);
    csv << i;
    for (double x : q.coords()) csv << "," << csv_number(x);
    csv << "," << csv_number(q.t) << "," << csv_number(cf::distance(cfg.dom, centre, q)) << "," << csv_number(k) << ","
        << csv_number(std::abs(k) / cf::kernel_envelope(cfg.dom, cfg.w, o.n, centre, q)) << "\n";
  }
  atomic_write(o.out, csv.str());
  std::cout << "kernel: " << path.size() << " rows -> " << o.out.string() << "\n";
  return 0;
}

int run_frame(const RunConfig& cfg, const FrameOptions& o) {
  const cf::Frame fr = cf::build_frame(cfg.dom, cfg.w, o.J, o.delta, cfg.tol_cubature);
  save_artifact(o.out, "frame", fr);
  std::cout << "frame: J " << fr.J << ", " << fr.size() << " elements, band limit " << cf::frame_band_limit(fr.J)
            << " -> " << o.out.string() << "\n";
  return 0;
}

int run_approx(const RunConfig& cfg, const ApproxOptions& o) {
  const cf::ProjectionSeries s = cf::project(cfg.dom, cfg.w, test_function(o.function), o.N);
  std::ostringstream csv;
  csv << "n,best_error,k_functional,modulus,near_best_error\n";
  for (int n : o.n_list) {
    const double theta = 1.0 / n;
    csv << n << "," << csv_number(cf::best_error_l2(s, n)) << "," << csv_number(cf::k_functional(s, o.r, theta)) << ","
        << csv_number(cf::modulus(s, o.r, theta)) << "," << csv_number(cf::near_best_error_l2(s, n, cf::Cutoff{}))
        << "\n";
  }
  atomic_write(o.out, csv.str());
  std::cout << "approx: " << o.n_list.size() << " rows -> " << o.out.string() << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg, const VerifyOptions& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& s : suite_registry()) names.push_back(s.name);
  } else {
    names.push_back(o.suite);
  }
  SuiteInputs in;
  in.frame = o.frame;
  in.trials = o.trials;
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, cfg, in);
    write_suite(r, cfg.out_dir);
    std::cout << summary_line(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : kExitVerify;
}

int run_report(const ReportOptions& o) {
  const auto bundle = report_bundle(o.dir);
  const auto out = o.out.value_or(o.dir / "summary.json");
  atomic_write(out, dump(bundle));
  const auto c = count_status(bundle);
  std::cout << "report: " << c.pass << " PASS, " << c.fail << " FAIL, " << c.skipped << " SKIPPED -> " << out.string()
            << "\n";
  return c.fail > 0 ? kExitVerify : 0;
}

}  // namespace cfcli
