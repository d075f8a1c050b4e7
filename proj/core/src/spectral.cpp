#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cf/approx.hpp"
#include "cf/error.hpp"

namespace cf {

namespace {

constexpr std::array<int, 4> kOff{-2, -1, 1, 2};
constexpr std::array<double, 4> kD1{1.0 / 12.0, -2.0 / 3.0, 2.0 / 3.0, -1.0 / 12.0};
constexpr std::array<double, 5> kD2{-1.0 / 12.0, 4.0 / 3.0, -2.5, 4.0 / 3.0, -1.0 / 12.0};  // offsets -2..2

template <class F>
double d1(F&& f, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += kD1[i] * f(kOff[i] * h);
  return s / h;
}

template <class F>
double d2(F&& f, double h) {
  double s = 0.0;
  for (int i = -2; i <= 2; ++i) s += kD2[static_cast<std::size_t>(i + 2)] * f(i * h);
  return s / (h * h);
}

template <class F>
double d11(F&& f, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) s += kD1[i] * kD1[j] * f(kOff[i] * h, kOff[j] * h);
  }
  return s / (h * h);
}

}  // namespace

SpectralReport spectral_check(const Domain& dom, const Weight& w, const BasisIndex& idx, int probes, double h) {
  validate(dom, w);
  if (dom.kind == DomainKind::Surface && w.beta != 0.0) throw ParameterError("surface operator needs beta = 0");
  if (dom.kind == DomainKind::Solid && w.beta != 0.5) throw ParameterError("solid operator needs beta = 1/2");
  const double rho2 = dom.rho * dom.rho;
  const double d = dom.d;
  const double ev = spectral_eigenvalue(dom, w, idx.n);
  const auto f = [&](const Point& p) { return basis_eval(dom, w, idx, p); };

  SpectralReport rep;
  rep.index = idx;
  rep.eigenvalue = -ev;
  std::vector<double> deviation, scale;
  for (int i = 1; i <= probes; ++i) {
    const double s = 0.2 + 0.6 * halton(static_cast<std::uint64_t>(i), 2);
    const double phi = 2.0 * std::numbers::pi * halton(static_cast<std::uint64_t>(i), 3);
    const double t = std::sqrt(s * s + rho2) * (i % 2 == 0 ? -1.0 : 1.0);
    if (std::abs(t) - 4.0 * h <= dom.rho || t * t + 4.0 * h >= 1.0 + rho2) {
      ++rep.probes_skipped;
      continue;
    }
    const double A = (1.0 + rho2 - t * t) * (1.0 - rho2 / (t * t));
    double value = 0.0, centre = 0.0;
    if (dom.kind == DomainKind::Surface) {
      const auto F = [&](double tt, double ph) {
        const double r = std::sqrt(std::max(0.0, tt * tt - rho2));
        return f(Point({r * std::cos(ph), r * std::sin(ph)}, tt));
      };
      centre = F(t, phi);
      const double Ft = d1([&](double e) { return F(t + e, phi); }, h);
      const double Ftt = d2([&](double e) { return F(t + e, phi); }, h);
      const double Fpp = d2([&](double e) { return F(t, phi + e); }, h);
      const double B = ((1.0 + rho2 - t * t) * rho2 / (t * t) - (2.0 * w.gamma + d) * (t * t - rho2)) / t + (d - 1.0) / t;
      value = A * Ftt + B * Ft + Fpp / (t * t - rho2);
    } else {
      const double rr = 0.1 + 0.7 * halton(static_cast<std::uint64_t>(i), 5);
      const double x1 = rr * s * std::cos(phi), x2 = rr * s * std::sin(phi);
      // G(a, b, c, e) = f((e^c) (x1 + a, x2 + b), t + e)
      const auto G = [&](double a, double b, double c, double e) {
        const double sc = std::exp(c);
        return f(Point({sc * (x1 + a), sc * (x2 + b)}, t + e));
      };
      centre = G(0, 0, 0, 0);
      const double Ft = d1([&](double e) { return G(0, 0, 0, e); }, h);
      const double Ftt = d2([&](double e) { return G(0, 0, 0, e); }, h);
      const double Lap = d2([&](double e) { return G(e, 0, 0, 0); }, h) + d2([&](double e) { return G(0, e, 0, 0); }, h);
      const double E = d1([&](double e) { return G(0, 0, e, 0); }, h);
      const double E2 = d2([&](double e) { return G(0, 0, e, 0); }, h);
      const double Et = d11([&](double c, double e) { return G(0, 0, c, e); }, h);
      const double q = 1.0 + rho2 - t * t;
      value = A * Ftt + Lap - E2 + E + 2.0 / t * q * Et + (q * rho2 / (t * t) + 2.0 * w.mu + d) / t * Ft -
              (2.0 * w.gamma + 2.0 * w.mu + d + 1.0) * ((1.0 - rho2 / (t * t)) * t * Ft + E);
    }
    deviation.push_back(std::abs(value + ev * centre));
    scale.push_back(std::abs(ev * centre));
    ++rep.probes_used;
  }
  if (deviation.empty()) return rep;
  // relative to the largest |mu C| seen; absolute for the constant element
  const double top = *std::max_element(scale.begin(), scale.end());
  const double norm = ev > 0.0 && top > 0.0 ? top : 1.0;
  for (double dv : deviation) rep.max_relative_deviation = std::max(rep.max_relative_deviation, dv / norm);
  return rep;
}

}  // namespace cf
