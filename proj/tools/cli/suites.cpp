#include "cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>

#include "cf/approx.hpp"
#include "cf/error.hpp"
#include "cf/frames.hpp"
#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"
#include "cf/rng.hpp"
#include "cli/artifacts.hpp"

namespace cfcli {

using cf::CounterRng;
using cf::Domain;
using cf::DomainKind;
using cf::Point;
using cf::Weight;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Spread {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double ratio() const { return hi / lo; }
};

std::string label(const Domain& dom, const Weight& w) {
  json j{{"domain", domain_name(dom.kind)}, {"rho", dom.rho}, {"beta", w.beta}, {"gamma", w.gamma}};
  if (dom.kind == DomainKind::Solid) j["mu"] = w.mu;
  return j.dump();
}

int dim(const Domain& dom) { return dom.kind == DomainKind::Surface ? dom.d : dom.d + 1; }

// Kernel-admissible weights: beta is tied to the domain.
Weight kernel_weight(DomainKind kind, double gamma, double mu) {
  return kind == DomainKind::Surface ? Weight{0.0, gamma, 0.0} : Weight{0.5, gamma, mu};
}

Point random_point(const Domain& dom, const CounterRng& rng, std::uint64_t i) {
  return cf::domain_point(dom, rng.uniform(4 * i), rng.uniform(4 * i + 1), rng.uniform(4 * i + 2),
                          rng.uniform(4 * i + 3));
}

// Reference point at height t: on the surface |x| = t, in the solid |x| = rel * t.
Point reference_point(const Domain& dom, double t, double rel) {
  const double s = std::sqrt(std::max(0.0, t * t - dom.rho * dom.rho));
  const double r = dom.kind == DomainKind::Surface ? s : rel * s;
  return Point({r, 0.0}, t);
}

std::vector<double> random_coefficients(const CounterRng& rng, std::size_t count, std::uint64_t offset) {
  std::vector<double> c(count);
  for (std::size_t i = 0; i < count; ++i) c[i] = rng.normal(offset + i);
  return c;
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// Distance grid for the decay fits: 16 logarithmic bins over [0.25, 1].
constexpr double kFitNear = 0.25;
constexpr double kFitFar = 1.0;
constexpr int kFitBins = 16;

int fit_bin(double d) {
  if (d < kFitNear || d >= kFitFar) return -1;
  return static_cast<int>(kFitBins * std::log(d / kFitNear) / std::log(kFitFar / kFitNear));
}

double fit_bin_centre(int b) { return kFitNear * std::pow(kFitFar / kFitNear, (b + 0.5) / kFitBins); }

// ---------------------------------------------------------------------------

SuiteResult addition_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr double kTol = 1e-9;
  constexpr int kMaxDegree = 8;
  constexpr int kPairs = 12;
  const CounterRng rng = CounterRng(cfg.seed).split(1);
  SuiteResult r;
  double worst = 0.0;
  int cases = 0;
  std::uint64_t draw = 0;
  for (DomainKind kind : {DomainKind::Surface, DomainKind::Solid}) {
    for (double rho : {0.0, 0.5}) {
      for (double gamma : {0.0, 0.5, 1.0}) {
        for (double mu : {0.0, 0.5, 1.0}) {
          if (kind == DomainKind::Surface && mu != 0.0) continue;
          const Domain dom{kind, 2, rho};
          const Weight w = kernel_weight(kind, gamma, mu);
          const cf::BasisSet basis(dom, w, kMaxDegree);
          const cf::KernelContext ctx = cf::make_kernel_context(dom, w, kMaxDegree);
          double local = 0.0;
          for (int i = 0; i < kPairs; ++i) {
            const Point p = random_point(dom, rng, draw++);
            Point q = random_point(dom, rng, draw++);
            if (rho > 0.0) q.t = std::copysign(q.t, p.t);
            for (int n = 0; n <= kMaxDegree; ++n) {
              const double ref = cf::basis_kernel(basis, n, p, q);
              const double err = std::abs(cf::reprod_kernel(ctx, n, p, q) - ref) / std::max(1.0, std::abs(ref));
              local = std::max(local, err);
              ++cases;
            }
          }
          r.observed["max_error_by_config"][label(dom, w)] = local;
          worst = std::max(worst, local);
        }
      }
    }
  }
  r.observed["max_error"] = worst;
  r.observed["cases"] = cases;
  r.thresholds["max_error"] = kTol;
  r.pass = worst <= kTol;
  return r;
}

SuiteResult reproduction_suite(const RunConfig& cfg, const SuiteInputs& in) {
  constexpr double kTol = 1e-9;
  constexpr int kProbes = 5;
  const int trials = in.trials;
  const CounterRng rng = CounterRng(cfg.seed).split(2);
  SuiteResult r;
  double worst = 0.0;
  std::uint64_t draw = 0;
  const std::vector<std::pair<Domain, Weight>> configs = {
      {{DomainKind::Surface, 2, 0.0}, kernel_weight(DomainKind::Surface, 1.0, 0.0)},
      {{DomainKind::Surface, 2, 0.5}, kernel_weight(DomainKind::Surface, 0.5, 0.0)},
      {{DomainKind::Solid, 2, 0.0}, kernel_weight(DomainKind::Solid, 0.5, 0.5)},
      {{DomainKind::Solid, 2, 0.5}, kernel_weight(DomainKind::Solid, 1.0, 0.0)},
  };
  for (const auto& [dom, w] : configs) {
    for (int n : {4, 8, 12}) {
      const cf::BasisSet basis(dom, w, n);
      const cf::ReferenceRule rule = cf::reference_rule(dom, w, 3 * n + 2);
      const cf::KernelSeries kernel(cf::make_kernel_context(dom, w, 2 * n),
                                    cf::localized_coefficients(n, cf::Cutoff{}));
      std::vector<std::vector<double>> coeff(static_cast<std::size_t>(trials));
      std::vector<double> scale(coeff.size());
      for (std::size_t k = 0; k < coeff.size(); ++k) {
        coeff[k] = random_coefficients(rng, basis.size(), draw);
        draw += basis.size();
        double e = 0.0;
        for (double c : coeff[k]) e += c * c;
        scale[k] = std::sqrt(e);
      }
      // values[k][i] = q_k(node i)
      std::vector<std::vector<double>> values(coeff.size(), std::vector<double>(rule.size()));
      std::vector<double> v(basis.size());
      for (std::size_t i = 0; i < rule.size(); ++i) {
        basis.eval(rule.points[i], v);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
          double s = 0.0;
          for (std::size_t b = 0; b < v.size(); ++b) s += coeff[k][b] * v[b];
          values[k][i] = s;
        }
      }
      double local = 0.0;
      for (int pi = 0; pi < kProbes; ++pi) {
        const Point p = random_point(dom, rng, draw++);
        std::vector<double> kw(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i) {
          // the kernel is even in t, so the far sheet of a hyperboloid is reached by reflection
          Point y = rule.points[i];
          if (dom.rho > 0.0 && y.t * p.t < 0.0) y.t = -y.t;
          kw[i] = rule.weights[i] * kernel(p, y);
        }
        basis.eval(p, v);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
          double integral = 0.0;
          for (std::size_t i = 0; i < rule.size(); ++i) integral += kw[i] * values[k][i];
          double exact = 0.0;
          for (std::size_t b = 0; b < v.size(); ++b) exact += coeff[k][b] * v[b];
          local = std::max(local, std::abs(integral - exact) / scale[k]);
        }
      }
      r.observed["max_error_by_config"][label(dom, w)][std::to_string(n)] = local;
      worst = std::max(worst, local);
    }
  }
  r.observed["max_error"] = worst;
  r.observed["trials"] = trials;
  r.thresholds["max_error"] = kTol;
  r.pass = worst <= kTol;
  return r;
}

struct DecayFit {
  double exponent = 0.0;
  json detail = json::object();
};

SuiteResult localization_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr double kMinKappa = 6.0;
  constexpr double kMaxL1Spread = 2.0;
  constexpr int kSamples = 40000;
  const std::vector<int> fit_n = cfg.n_list.empty() ? std::vector<int>{16, 32, 64} : cfg.n_list;
  const std::vector<int> l1_n = {8, 16, 32, 64};
  SuiteResult r;
  bool pass = true;
  for (DomainKind kind : {DomainKind::Surface, DomainKind::Solid}) {
    const Domain dom{kind, 2, 0.0};
    const Weight w = kind == DomainKind::Surface ? kernel_weight(kind, 1.0, 0.0) : kernel_weight(kind, 0.5, 0.5);
    const Point p = reference_point(dom, 0.5, 0.5);
    json out;
    out["weight"] = label(dom, w);

    std::vector<double> xs, ys;
    for (int n : fit_n) {
      const cf::KernelSeries kernel(cf::make_kernel_context(dom, w, 2 * n),
                                    cf::localized_coefficients(n, cf::Cutoff{}), 1024 * n);
      std::vector<double> env(kFitBins, 0.0);
      double c6 = 0.0;
      for (int i = 1; i <= kSamples; ++i) {
        const auto k = static_cast<std::uint64_t>(i);
        const Point q = cf::domain_point(dom, cf::halton(k, 2), cf::halton(k, 3), cf::halton(k, 5), cf::halton(k, 7));
        const double d = cf::distance(dom, p, q);
        const double v = std::abs(kernel(p, q)) / cf::kernel_envelope(dom, w, n, p, q);
        c6 = std::max(c6, v * std::pow(1.0 + n * d, 6.0));
        if (const int b = fit_bin(d); b >= 0) env[static_cast<std::size_t>(b)] = std::max(env[static_cast<std::size_t>(b)], v);
      }
      for (int b = 0; b < kFitBins; ++b) {
        if (env[static_cast<std::size_t>(b)] <= 0.0) continue;
        xs.push_back(1.0 + n * fit_bin_centre(b));
        ys.push_back(env[static_cast<std::size_t>(b)]);
      }
      out["c6"][std::to_string(n)] = c6;
    }
    const double kappa = -loglog_slope(xs, ys);
    out["kappa"] = kappa;

    Spread l1;
    for (int n : l1_n) {
      const cf::KernelSeries kernel(cf::make_kernel_context(dom, w, 2 * n),
                                    cf::localized_coefficients(n, cf::Cutoff{}), 1024 * n);
      const cf::ReferenceRule rule = cf::reference_rule(dom, w, 2 * n + 16);
      double s = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::abs(kernel(p, rule.points[i]));
      out["l1"][std::to_string(n)] = s;
      l1.add(s);
    }
    out["l1_spread"] = l1.ratio();
    pass = pass && kappa >= kMinKappa && l1.ratio() <= kMaxL1Spread;
    r.observed[domain_name(kind)] = out;
  }
  r.thresholds["kappa_min"] = kMinKappa;
  r.thresholds["fit_distance"] = {kFitNear, kFitFar};
  r.thresholds["l1_spread_max"] = kMaxL1Spread;
  r.pass = pass;
  return r;
}

SuiteResult separation_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr int kProbes = 10000;
  constexpr int kMaxMultiplicity = 12;
  constexpr double kMaxCardinalitySpread = 3.0;
  const std::vector<double> eps = cfg.eps_list.empty() ? std::vector<double>{0.2, 0.1, 0.05} : cfg.eps_list;
  SuiteResult r;
  bool pass = true;
  for (const Domain& dom : {Domain{DomainKind::Surface, 2, 0.0}, Domain{DomainKind::Surface, 2, 0.5},
                            Domain{DomainKind::Solid, 2, 0.0}}) {
    json out;
    Spread card;
    for (double e : eps) {
      const cf::SeparatedSet s = cf::build_separated(dom, e);
      const cf::SeparationReport rep = cf::verify_separated(s, kProbes);
      const double scaled = static_cast<double>(s.size()) * std::pow(e, dim(dom));
      card.add(scaled);
      const bool ok = rep.min_distance >= e * (1.0 - 1e-12) && rep.min_multiplicity >= 1 &&
                      rep.max_multiplicity <= kMaxMultiplicity && rep.evenly_symmetric;
      pass = pass && ok;
      out[std::to_string(e)] = {{"size", s.size()},
                                {"min_distance", rep.min_distance},
                                {"multiplicity", {rep.min_multiplicity, rep.max_multiplicity}},
                                {"size_times_eps_pow_dim", scaled},
                                {"symmetric", rep.evenly_symmetric}};
    }
    out["cardinality_spread"] = card.ratio();
    pass = pass && card.ratio() <= kMaxCardinalitySpread;
    r.observed[json{{"domain", domain_name(dom.kind)}, {"rho", dom.rho}}.dump()] = out;
  }
  r.thresholds["distance_relative_slack"] = 1e-12;
  r.thresholds["multiplicity"] = {1, kMaxMultiplicity};
  r.thresholds["cardinality_spread_max"] = kMaxCardinalitySpread;
  r.pass = pass;
  return r;
}

SuiteResult ball_measure_suite(const RunConfig&, const SuiteInputs&) {
  constexpr double kMaxC = 10.0;
  constexpr double kSolidRelativeRadius = 0.5;
  SuiteResult r;
  bool pass = true;
  const std::vector<std::pair<Domain, Weight>> configs = {
      {{DomainKind::Surface, 2, 0.0}, {0.0, 0.0, 0.0}}, {{DomainKind::Surface, 2, 0.0}, {0.0, 0.5, 0.0}},
      {{DomainKind::Surface, 2, 0.0}, {0.0, 1.0, 0.0}}, {{DomainKind::Surface, 2, 0.0}, {0.5, 0.5, 0.0}},
      {{DomainKind::Solid, 2, 0.0}, {0.5, 0.0, 0.0}},   {{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}},
      {{DomainKind::Solid, 2, 0.0}, {0.5, 1.0, 1.0}},   {{DomainKind::Solid, 2, 0.0}, {0.0, 0.5, 0.5}},
  };
  for (const auto& [dom, w] : configs) {
    Spread ratio;
    for (int i = 0; i < 10; ++i) {
      const double t = i == 0 ? 0.0 : i == 9 ? 1.0 : (i + 0.5) / 10.0;
      const Point p = reference_point(dom, t, kSolidRelativeRadius);
      for (int k = 0; k < 5; ++k) {
        const double rad = kPi / 12.0 / std::ldexp(1.0, k);
        ratio.add(cf::ball_measure(dom, w, p, rad) / cf::ball_comparison(dom, w, p, rad));
      }
    }
    const double c = std::sqrt(ratio.ratio());
    r.observed[label(dom, w)] = {{"C", c}, {"ratio_range", {ratio.lo, ratio.hi}}};
    pass = pass && c <= kMaxC;
  }
  r.thresholds["C_max"] = kMaxC;
  r.thresholds["solid_relative_radius"] = kSolidRelativeRadius;
  r.pass = pass;
  return r;
}

SuiteResult cubature_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr double kMaxResidual = 1e-8;
  constexpr double kMaxRatioSpread = 10.0;
  constexpr double kDelta = 1.0;
  SuiteResult r;
  bool pass = true;
  const std::vector<std::tuple<Domain, Weight, int>> configs = {
      {{DomainKind::Surface, 2, 0.0}, {0.0, 0.5, 0.0}, 8},
      {{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, 6},
  };
  for (const auto& [dom, w, n] : configs) {
    const cf::CubatureRule rule = cf::cubature_build(dom, w, n, kDelta, cfg.tol_cubature);
    Spread ratio;
    double lmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rule.size(); ++i) {
      lmin = std::min(lmin, rule.lambda[i]);
      ratio.add(rule.lambda[i] / cf::ball_measure(dom, w, rule.nodes.nodes[i].p, rule.delta / n));
    }
    r.observed[label(dom, w)] = {{"degree", n},         {"nodes", rule.size()},       {"delta", rule.delta},
                                 {"residual", rule.residual}, {"lambda_min", lmin}, {"ratio_range", {ratio.lo, ratio.hi}},
                                 {"ratio_spread", ratio.ratio()}};
    pass = pass && lmin > 0.0 && rule.residual <= kMaxResidual && ratio.ratio() <= kMaxRatioSpread;
  }
  r.thresholds["residual_max"] = kMaxResidual;
  r.thresholds["ratio_spread_max"] = kMaxRatioSpread;
  r.pass = pass;
  return r;
}

SuiteResult mz_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr double kMaxSpread = 3.0;
  constexpr int kTrials = 10;
  SuiteResult r;
  bool pass = true;
  const std::vector<std::tuple<Domain, Weight, double, std::vector<int>>> configs = {
      {{DomainKind::Surface, 2, 0.0}, {0.0, 1.0, 0.0}, 0.5, cfg.n_list.empty() ? std::vector<int>{8, 16, 32} : cfg.n_list},
      {{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, 1.0, {8, 16}},
  };
  for (const auto& [dom, w, delta, ns] : configs) {
    Spread upper, lower;
    json out;
    for (int n : ns) {
      const cf::SeparatedSet nodes = cf::build_separated(dom, cf::cubature_separation(n, delta));
      const cf::MZReport rep = cf::mz_check(w, n, nodes, kTrials, cfg.seed);
      upper.add(rep.upper_max);
      lower.add(rep.lower_max);
      out[std::to_string(n)] = {{"nodes", nodes.size()},
                                {"upper", {rep.upper_min, rep.upper_max}},
                                {"lower", {rep.lower_min, rep.lower_max}},
                                {"sup_over_node_max", rep.upper_inf_max}};
    }
    out["delta"] = delta;
    out["upper_spread"] = upper.ratio();
    out["lower_spread"] = lower.ratio();
    pass = pass && upper.ratio() <= kMaxSpread && lower.ratio() <= kMaxSpread;
    r.observed[label(dom, w)] = out;
  }
  r.thresholds["spread_max"] = kMaxSpread;
  r.pass = pass;
  return r;
}

// Frames are expensive and shared by the Parseval and needlet suites.
const cf::Frame& cached_frame(const Domain& dom, const Weight& w, int J, double delta, double tol) {
  static std::map<std::string, cf::Frame> cache;
  const std::string key = label(dom, w) + std::to_string(J) + "/" + std::to_string(delta) + "/" + std::to_string(tol);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, cf::build_frame(dom, w, J, delta, tol)).first;
  return it->second;
}

std::vector<cf::Frame> suite_frames(const RunConfig& cfg, const SuiteInputs& in) {
  if (in.frame) return {load_artifact<cf::Frame>(*in.frame, "frame")};
  return {cached_frame({DomainKind::Surface, 2, 0.0}, {0.0, 1.0, 0.0}, 4, 1.0, cfg.tol_cubature),
          cached_frame({DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, 4, 1.0, cfg.tol_cubature)};
}

SuiteResult parseval_suite(const RunConfig& cfg, const SuiteInputs& in) {
  constexpr double kMaxRoundTrip = 1e-6;
  const CounterRng rng = CounterRng(cfg.seed).split(8);
  SuiteResult r;
  bool pass = true;
  std::uint64_t draw = 0;
  for (const cf::Frame& fr : suite_frames(cfg, in)) {
    const cf::BasisSet basis(fr.dom, fr.w, cf::frame_band_limit(fr.J));
    double defect = 0.0, roundtrip = 0.0;
    for (int k = 0; k < in.trials; ++k) {
      const auto c = random_coefficients(rng, basis.size(), draw);
      draw += basis.size();
      double e = 0.0;
      for (double x : c) e += x * x;
      const cf::FrameCoefficients fc = cf::frame_analyze(fr, c);
      defect = std::max(defect, std::abs(fc.energy() - e) / e);
      const auto back = cf::frame_synthesize(fr, fc);
      double diff = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) diff += (back[i] - c[i]) * (back[i] - c[i]);
      roundtrip = std::max(roundtrip, std::sqrt(diff / e));
    }
    r.observed[label(fr.dom, fr.w)] = {{"J", fr.J},
                                       {"band_limit", cf::frame_band_limit(fr.J)},
                                       {"elements", fr.size()},
                                       {"parseval_defect", defect},
                                       {"roundtrip_error", roundtrip}};
    pass = pass && defect <= cfg.tol_parseval && roundtrip <= kMaxRoundTrip;
  }
  r.observed["trials"] = in.trials;
  r.thresholds["parseval_defect_max"] = cfg.tol_parseval;
  r.thresholds["roundtrip_error_max"] = kMaxRoundTrip;
  r.pass = pass;
  return r;
}

SuiteResult needlet_suite(const RunConfig& cfg, const SuiteInputs& in) {
  constexpr double kMinSigma = 5.0;
  constexpr int kSamples = 20000;
  SuiteResult r;
  bool pass = true;
  for (const cf::Frame& fr : suite_frames(cfg, in)) {
    const Domain& dom = fr.dom;
    const Point ref = reference_point(dom, 0.5, 0.5);
    json out;
    for (int j = 2; j <= std::min(4, fr.J); ++j) {
      const auto& nodes = fr.levels[static_cast<std::size_t>(j)].rule.nodes.nodes;
      std::size_t centre = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (dom.rho > 0.0 && nodes[i].p.t < 0.0) continue;
        const double d = cf::distance(dom, ref, nodes[i].p);
        if (d < best) {
          best = d;
          centre = i;
        }
      }
      const Point xi = nodes[centre].p;
      const double n = std::ldexp(1.0, j);
      std::vector<double> env(kFitBins, 0.0);
      for (int i = 1; i <= kSamples; ++i) {
        const auto k = static_cast<std::uint64_t>(i);
        Point q = cf::domain_point(dom, cf::halton(k, 2), cf::halton(k, 3), cf::halton(k, 5), cf::halton(k, 7));
        if (dom.rho > 0.0) q.t = std::abs(q.t);
        const int b = fit_bin(cf::distance(dom, xi, q));
        if (b < 0) continue;
        const double v = std::abs(cf::frame_element(fr, j, centre, q)) * std::sqrt(cf::wn_eval(dom, fr.w, n, q)) /
                         std::pow(n, dim(dom) / 2.0);
        env[static_cast<std::size_t>(b)] = std::max(env[static_cast<std::size_t>(b)], v);
      }
      std::vector<double> xs, ys;
      for (int b = 0; b < kFitBins; ++b) {
        if (env[static_cast<std::size_t>(b)] <= 0.0) continue;
        xs.push_back(1.0 + n * fit_bin_centre(b));
        ys.push_back(env[static_cast<std::size_t>(b)]);
      }
      const double sigma = -loglog_slope(xs, ys);
      out["sigma"][std::to_string(j)] = sigma;
      pass = pass && sigma >= kMinSigma;
    }
    r.observed[label(fr.dom, fr.w)] = out;
  }
  r.thresholds["sigma_min"] = kMinSigma;
  r.thresholds["fit_distance"] = {kFitNear, kFitFar};
  r.pass = pass;
  return r;
}

SuiteResult spectral_suite(const RunConfig&, const SuiteInputs&) {
  constexpr double kTol = 1e-3;
  constexpr int kProbes = 20;
  SuiteResult r;
  double worst = 0.0;
  int skipped = 0;
  for (DomainKind kind : {DomainKind::Surface, DomainKind::Solid}) {
    for (double rho : {0.0, 0.5}) {
      for (double gamma : {0.0, 0.5, 1.0}) {
        const Domain dom{kind, 2, rho};
        const Weight w = kernel_weight(kind, gamma, 0.5);
        const cf::BasisSet basis(dom, w, 4);
        double local = 0.0;
        for (const auto& idx : basis.indices()) {
          const cf::SpectralReport rep = cf::spectral_check(dom, w, idx, kProbes);
          local = std::max(local, rep.max_relative_deviation);
          skipped += rep.probes_skipped;
        }
        r.observed["max_deviation_by_config"][label(dom, w)] = local;
        worst = std::max(worst, local);
      }
    }
  }
  r.observed["max_deviation"] = worst;
  r.observed["probes_skipped"] = skipped;
  r.thresholds["max_deviation"] = kTol;
  r.pass = worst <= kTol && skipped == 0;
  return r;
}

SuiteResult jackson_suite(const RunConfig& cfg, const SuiteInputs&) {
  constexpr double kOrder = 2.0;
  constexpr double kMaxJackson = 10.0;
  constexpr double kEquivLow = 0.1, kEquivHigh = 10.0;
  constexpr double kMaxDecayRatio = 0.9;
  SuiteResult r;
  bool pass = true;
  const std::vector<std::pair<std::string, cf::PointFunction>> functions = {
      {"analytic", [](const Point& p) { return std::exp(p.x[0] + p.t * p.t); }},
      {"abs_t", [](const Point& p) { return std::abs(p.t); }},
      {"bump", [](const Point& p) {
         const double a = p.x[0] - 0.3, b = p.x[1], c = std::abs(p.t) - 0.5;
         return std::exp(-(a * a + b * b + c * c) / 0.1);
       }},
  };
  const std::vector<std::tuple<Domain, Weight, int, std::vector<int>>> configs = {
      {{DomainKind::Surface, 2, 0.0}, {0.0, 1.0, 0.0}, 128, {2, 4, 8, 16, 32}},
      {{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, 64, {2, 4, 8, 16}},
  };
  for (const auto& [dom, w, N, ns] : configs) {
    json out;
    out["N"] = N;
    for (const auto& [fname, f] : functions) {
      const cf::ProjectionSeries s = cf::project(dom, w, f, N);
      double jackson = 0.0, decay = 0.0;
      Spread equiv;
      double prev = -1.0;
      json rows = json::array();
      for (int n : ns) {
        const double E = cf::best_error_l2(s, n);
        const double K = cf::k_functional(s, kOrder, 1.0 / n);
        const double nb = cf::near_best_error_l2(s, n, cf::Cutoff{});
        jackson = std::max(jackson, E / K);
        rows.push_back({{"n", n}, {"E", E}, {"K", K}, {"near_best", nb}});
        if (fname == "analytic" && prev > 0.0) decay = std::max(decay, nb / prev);
        prev = nb;
      }
      const std::vector<double> thetas = [&] {
        if (!cfg.theta_list.empty()) return cfg.theta_list;
        std::vector<double> t;
        for (int n : ns) t.push_back(1.0 / n);
        return t;
      }();
      for (double th : thetas) equiv.add(cf::modulus(s, kOrder, th) / cf::k_functional(s, kOrder, th));
      out[fname] = {{"sweep", rows}, {"jackson_constant", jackson}, {"equivalence_range", {equiv.lo, equiv.hi}}};
      pass = pass && jackson <= kMaxJackson && equiv.lo >= kEquivLow && equiv.hi <= kEquivHigh;
      if (fname == "analytic") {
        out[fname]["near_best_decay_ratio"] = decay;
        pass = pass && decay <= kMaxDecayRatio;
      }
    }
    r.observed[label(dom, w)] = out;
  }
  r.thresholds["order_r"] = kOrder;
  r.thresholds["jackson_constant_max"] = kMaxJackson;
  r.thresholds["equivalence_range"] = {kEquivLow, kEquivHigh};
  r.thresholds["near_best_decay_ratio_max"] = kMaxDecayRatio;
  r.pass = pass;
  return r;
}

SuiteResult christoffel_suite(const RunConfig&, const SuiteInputs&) {
  constexpr double kMaxC = 10.0;
  SuiteResult r;
  bool pass = true;
  for (DomainKind kind : {DomainKind::Surface, DomainKind::Solid}) {
    for (double gamma : {0.0, 0.5, 1.0}) {
      const Domain dom{kind, 2, 0.0};
      const Weight w = kernel_weight(kind, gamma, 0.5);
      Spread ratio;
      for (int n : {4, 8, 16, 32}) {
        const cf::KernelContext ctx = cf::make_kernel_context(dom, w, n);
        for (int i = 0; i < 10; ++i) {
          const double t = i == 9 ? 1.0 : (i + 0.5) / 10.0;
          const Point p = reference_point(dom, t, 0.5);
          ratio.add(cf::christoffel(ctx, n, p) * std::pow(n, dim(dom)) / cf::wn_eval(dom, w, n, p));
        }
      }
      const double c = std::sqrt(ratio.ratio());
      r.observed[label(dom, w)] = {{"C", c}, {"ratio_range", {ratio.lo, ratio.hi}}};
      pass = pass && c <= kMaxC;
    }
  }
  r.thresholds["C_max"] = kMaxC;
  r.pass = pass;
  return r;
}

}  // namespace

json SuiteResult::to_json() const {
  return json{{"suite", name}, {"title", title}, {"status", status()}, {"observed", observed}, {"thresholds", thresholds}};
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = {
      {"addition", "reproducing kernel: addition formula against basis sum", addition_suite},
      {"reproduction", "localized kernel reproduces low-degree polynomials", reproduction_suite},
      {"localization", "localized kernel decay exponent and weighted L1 bound", localization_suite},
      {"separation", "separated node sets: spacing, covering, cardinality", separation_suite},
      {"ball_measure", "metric ball measure against closed-form comparison", ball_measure_suite},
      {"cubature", "positive cubature: weights, exactness, local mass", cubature_suite},
      {"mz", "Marcinkiewicz-Zygmund sampling ratios for p = 2", mz_suite},
      {"parseval", "tight frame: Parseval identity and reconstruction", parseval_suite},
      {"needlet", "frame element decay by level", needlet_suite},
      {"spectral", "spectral operator eigenrelation by finite differences", spectral_suite},
      {"jackson", "Jackson bound and modulus/K-functional equivalence", jackson_suite},
      {"christoffel", "Christoffel function against ball-comparison function", christoffel_suite},
  };
  return registry;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg, const SuiteInputs& in) {
  for (const auto& s : suite_registry()) {
    if (s.name != name) continue;
    SuiteResult r = s.run(cfg, in);
    r.name = s.name;
    r.title = s.title;
    r.observed["seed"] = cfg.seed;
    return r;
  }
  throw cf::ParameterError("unknown suite '" + name + "'");
}

std::filesystem::path write_suite(const SuiteResult& r, const std::filesystem::path& dir) {
  const auto file = dir / ("suite_" + r.name + ".json");
  atomic_write(file, dump(r.to_json()));
  return file;
}

std::string summary_line(const SuiteResult& r) { return r.status() + " " + r.name + ": " + r.title; }

}  // namespace cfcli
