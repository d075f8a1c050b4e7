#include "cf/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>

#include "cf/error.hpp"
#include "cf/frames.hpp"

namespace cf {

namespace {

std::size_t degree_begin(DomainKind kind, int n) {
  std::size_t s = 0;
  for (int k = 0; k < n; ++k) s += even_space_dim(kind, k);
  return s;
}

// Degree of each coefficient slot.
std::vector<int> slot_degrees(DomainKind kind, int N) {
  std::vector<int> deg;
  for (int n = 0; n <= N; ++n) deg.insert(deg.end(), even_space_dim(kind, n), n);
  return deg;
}

}  // namespace

double ProjectionSeries::degree_energy(int n) const {
  if (n < 0 || n > N) return 0.0;
  const std::size_t b = degree_begin(dom.kind, n), e = b + even_space_dim(dom.kind, n);
  double s = 0.0;
  for (std::size_t i = b; i < e; ++i) s += coeff[i] * coeff[i];
  return s;
}

std::vector<double> ProjectionSeries::degree_energies() const {
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out[static_cast<std::size_t>(n)] = degree_energy(n);
  return out;
}

ProjectionSeries make_series(const Domain& dom, const Weight& w, int N, std::vector<double> coeff) {
  if (coeff.size() != degree_begin(dom.kind, N + 1)) throw ParameterError("coefficient count does not match degree");
  ProjectionSeries s;
  s.dom = dom;
  s.w = w;
  s.N = N;
  s.coeff = std::move(coeff);
  for (double c : s.coeff) s.norm2 += c * c;
  return s;
}

ProjectionSeries project(const Domain& dom, const Weight& w, const PointFunction& f, int N, int level) {
  if (N < 0) throw ParameterError("negative projection degree");
  require_even(dom, f);
  const BasisSet basis(dom, w, N);
  const ReferenceRule rule = reference_rule(dom, w, level > 0 ? level : 2 * N + 8);
  ProjectionSeries s;
  s.dom = dom;
  s.w = w;
  s.N = N;
  s.coeff.assign(basis.size(), 0.0);
  std::vector<double> v(basis.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double fv = f(rule.points[i]);
    if (!std::isfinite(fv)) throw IntegrationError("integrand not finite at reference node " + std::to_string(i));
    basis.eval(rule.points[i], v);
    const double wf = rule.weights[i] * fv;
    for (std::size_t k = 0; k < v.size(); ++k) s.coeff[k] += wf * v[k];
    s.norm2 += wf * fv;
  }
  return s;
}

double series_eval(const ProjectionSeries& s, const Point& p) {
  const BasisSet basis(s.dom, s.w, s.N);
  const auto v = basis.eval(p);
  double sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) sum += s.coeff[k] * v[k];
  return sum;
}

ProjectionSeries multiplier_apply(const ProjectionSeries& s, const DegreeMultiplier& m) {
  ProjectionSeries out = s;
  const auto deg = slot_degrees(s.dom.kind, s.N);
  std::vector<double> factor(static_cast<std::size_t>(s.N) + 1);
  for (int n = 0; n <= s.N; ++n) {
    factor[static_cast<std::size_t>(n)] = m(n);
    if (!std::isfinite(factor[static_cast<std::size_t>(n)])) throw NumericError("multiplier not finite");
  }
  out.norm2 = 0.0;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) {
    out.coeff[i] *= factor[static_cast<std::size_t>(deg[i])];
    out.norm2 += out.coeff[i] * out.coeff[i];
  }
  return out;
}

double translation_multiplier(const Domain& dom, const Weight& w, double theta, int n) {
  const double lambda =
      dom.kind == DomainKind::Surface ? w.gamma + (dom.d - 1) / 2.0 : w.gamma + w.mu + dom.d / 2.0;
  const double a = dom.kind == DomainKind::Surface ? lambda - 1.0 : lambda - 0.5;
  const JacobiParams p{a, a};
  return jacobi_eval(n, p, std::cos(theta)) / jacobi_at_one(n, p);
}

DegreeMultiplier difference_multiplier(const Domain& dom, const Weight& w, double theta, double r) {
  return [=](int n) {
    const double m = translation_multiplier(dom, w, theta, n);
    if (m > 1.0 + 1e-12 || m < -1.0 - 1e-12) throw NumericError("translation multiplier outside [-1, 1]");
    return std::pow(std::max(0.0, 1.0 - m), r / 2.0);
  };
}

DegreeMultiplier spectral_multiplier(const Domain& dom, const Weight& w, double r) {
  return [=](int n) { return std::pow(spectral_eigenvalue(dom, w, n), r / 2.0); };
}

ProjectionSeries near_best(const ProjectionSeries& s, int n, const Cutoff& c) {
  if (n < 1) throw ParameterError("near-best operator needs n >= 1");
  return multiplier_apply(s, [&](int k) { return cutoff_eval(c, static_cast<double>(k) / n); });
}

ProjectionSeries near_best_discrete(const CubatureRule& rule, const PointFunction& f, int n, const Cutoff& c) {
  if (n < 1) throw ParameterError("near-best operator needs n >= 1");
  const int top = 2 * n;
  const BasisSet basis(rule.dom, rule.w, top);
  std::vector<double> coeff(basis.size(), 0.0), v(basis.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Point& z = rule.nodes.nodes[i].p;
    const double wf = rule.lambda[i] * f(z);
    basis.eval(z, v);
    for (std::size_t k = 0; k < v.size(); ++k) coeff[k] += wf * v[k];
  }
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    coeff[k] *= cutoff_eval(c, static_cast<double>(basis.indices()[k].n) / n);
  }
  return make_series(rule.dom, rule.w, top, std::move(coeff));
}

namespace {

// Energy of f beyond degree N; gaps under the rounding bound of the coefficient sum are noise.
double energy_beyond(const ProjectionSeries& s, std::span<const double> e) {
  const double inside = std::accumulate(e.begin(), e.end(), 0.0);
  const double floor = std::numeric_limits<double>::epsilon() * static_cast<double>(s.coeff.size()) * s.norm2;
  const double gap = s.norm2 - inside;
  return gap > floor ? gap : 0.0;
}

}  // namespace

double best_error_l2(const ProjectionSeries& s, int n) {
  const auto e = s.degree_energies();
  double tail = 0.0;
  for (int k = n + 1; k <= s.N; ++k) tail += e[static_cast<std::size_t>(k)];
  return std::sqrt(tail + energy_beyond(s, e));
}

double near_best_error_l2(const ProjectionSeries& s, int n, const Cutoff& c) {
  if (n < 1) throw ParameterError("near-best index must be >= 1");
  const auto e = s.degree_energies();
  double err = 0.0;
  for (int k = 0; k <= s.N; ++k) {
    const double miss = 1.0 - cutoff_eval(c, static_cast<double>(k) / n);
    err += miss * miss * e[static_cast<std::size_t>(k)];
  }
  return std::sqrt(err + energy_beyond(s, e));
}

double best_error_upper(const Domain& dom, const Weight& w, const PointFunction& f, const ProjectionSeries& s,
                        int n, double p, int level) {
  const ProjectionSeries g = near_best(s, std::max(1, n / 2), Cutoff{});
  const BasisSet basis(dom, w, s.N);
  const ReferenceRule rule = reference_rule(dom, w, level);
  double acc = 0.0;
  std::vector<double> v(basis.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    basis.eval(rule.points[i], v);
    double gv = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) gv += g.coeff[k] * v[k];
    const double err = std::abs(f(rule.points[i]) - gv);
    if (p <= 0.0) {
      acc = std::max(acc, err);
    } else {
      acc += rule.weights[i] * std::pow(err, p);
    }
  }
  return p <= 0.0 ? acc : std::pow(acc, 1.0 / p);
}

double modulus(const ProjectionSeries& s, double r, double theta, int steps) {
  const auto e = s.degree_energies();
  double best = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double th = theta * i / steps;
    const auto m = difference_multiplier(s.dom, s.w, th, r);
    double sum = 0.0;
    for (int k = 0; k <= s.N; ++k) {
      const double f = m(k);
      sum += f * f * e[static_cast<std::size_t>(k)];
    }
    best = std::max(best, std::sqrt(sum));
  }
  return best;
}

double k_functional(const ProjectionSeries& s, double r, double t) {
  const auto e = s.degree_energies();
  const double beyond = std::max(0.0, s.norm2 - std::accumulate(e.begin(), e.end(), 0.0));
  double best = std::sqrt(s.norm2);
  const Cutoff c{};
  for (int m = 1; 2 * m <= s.N; m *= 2) {
    double err = beyond, smooth = 0.0;
    for (int k = 0; k <= s.N; ++k) {
      const double a = cutoff_eval(c, static_cast<double>(k) / m);
      const double ek = e[static_cast<std::size_t>(k)];
      err += (1.0 - a) * (1.0 - a) * ek;
      smooth += std::pow(spectral_eigenvalue(s.dom, s.w, k), r) * a * a * ek;
    }
    best = std::min(best, std::sqrt(err) + std::pow(t, r) * std::sqrt(smooth));
  }
  return best;
}

}  // namespace cf
