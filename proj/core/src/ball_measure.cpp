#include <algorithm>
#include <cmath>
#include <numbers>

#include "cf/error.hpp"
#include "cf/geometry.hpp"
#include "cf/orthopoly.hpp"

namespace cf {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of f over [a, b] by composite Gauss-Legendre after the change of
// variable x = a + (b-a)(1-cos(pi v))/2, which tames square-root endpoints.
template <class F>
double clustered(F&& f, double a, double b, int panels) {
  static const QuadRule1D gl = gauss_jacobi(8, {0.0, 0.0});
  if (!(b > a)) return 0.0;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double v0 = static_cast<double>(p) / panels, v1 = static_cast<double>(p + 1) / panels;
    for (int i = 0; i < gl.size(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double v = 0.5 * (v0 + v1) + 0.5 * (v1 - v0) * gl.nodes[k];
      const double x = a + 0.5 * (b - a) * (1.0 - std::cos(kPi * v));
      const double jac = 0.5 * (b - a) * kPi * std::sin(kPi * v);
      sum += gl.weights[k] * (v1 - v0) * jac * f(x);
    }
  }
  return sum;
}

// Cosine threshold tau(s) for cos d_sphere(x', y') in the ball condition; the
// second member reports whether t s vanishes (then the condition is all or nothing).
double ball_tau(double t, double s, double r, bool& degenerate) {
  const double rhs = std::cos(r) - std::sqrt(std::max(0.0, 1.0 - t * t)) * std::sqrt(std::max(0.0, 1.0 - s * s));
  const double ts = t * s;
  degenerate = ts < 1e-300;
  if (degenerate) return rhs <= 0.0 ? -2.0 : 2.0;
  return rhs / ts;
}

// Normalized (1 - |y|^2)^(mu - 1/2) measure of the ball {d_B(x', y') <= c} in B^2,
// via the hemisphere picture y' -> (y', sqrt(1 - |y'|^2)).
double disk_cap(double z0, double c, double mu) {
  if (c <= 0.0) return 0.0;
  c = std::min(c, kPi);
  const double rad = std::sqrt(std::max(0.0, 1.0 - z0 * z0));
  const double e = 2.0 * mu;
  const auto ring = [&](double alpha) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    double psimax = kPi;
    if (sa * rad > 1e-300) {
      const double kappa = -ca * z0 / (sa * rad);
      if (kappa >= 1.0) return 0.0;
      if (kappa > -1.0) psimax = std::acos(kappa);
    } else if (ca * z0 < 0.0) {
      return 0.0;
    }
    const auto integrand = [&](double psi) {
      const double z = ca * z0 + sa * std::cos(psi) * rad;
      return z > 0.0 ? std::pow(z, e) : (e == 0.0 ? 1.0 : 0.0);
    };
    return 2.0 * clustered(integrand, 0.0, psimax, 3) * sa;
  };
  const double split = std::atan2(z0, rad);  // distance from X' to the equator
  double v = 0.0;
  if (c <= split) {
    v = clustered(ring, 0.0, c, 4);
  } else {
    v = clustered(ring, 0.0, split, 4) + clustered(ring, split, c, 4);
  }
  return v * (2.0 * mu + 1.0) / (2.0 * kPi);
}

}  // namespace

double ball_measure(const Domain& dom, const Weight& w, const Point& center, double r) {
  validate(dom, w);
  if (dom.d != 2) throw ParameterError("ball_measure is implemented for d = 2");
  if (!(r > 0.0)) throw ParameterError("ball radius must be positive");
  Point c = rho_lift(center, dom.rho, 0.0);
  if (c.t < 0.0) c = c.mirrored();
  const double t = std::min(1.0, c.t);
  const double th_t = std::acos(t);
  const double lo = std::max(0.0, th_t - r), hi = std::min(kPi / 2.0, th_t + r);
  const bool solid = dom.kind == DomainKind::Solid;
  double radial_p = 2.0 * w.beta + 1.0;
  if (solid) radial_p += 2.0 * w.mu;
  const double q = 2.0 * w.gamma;
  const double a = (radial_p + 1.0) / 2.0, b = q / 2.0 + 0.5;
  const double total = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));

  double z0 = 1.0;
  if (solid && t > 0.0) z0 = std::sqrt(std::max(0.0, 1.0 - c.norm2() / (t * t)));

  const auto integrand = [&](double th) {
    const double s = std::cos(th);
    bool degenerate = false;
    const double tau = ball_tau(t, s, r, degenerate);
    double frac;
    if (!solid) {
      frac = tau <= -1.0 ? 1.0 : (tau >= 1.0 ? 0.0 : std::acos(tau) / kPi);
    } else if (tau <= -1.0) {
      frac = 1.0;
    } else if (tau >= 1.0) {
      frac = 0.0;
    } else {
      frac = disk_cap(z0, std::acos(tau), w.mu);
    }
    return std::pow(s, radial_p) * std::pow(std::sin(th), q) * frac;
  };
  const int panels = solid ? 12 : 48;
  return clustered(integrand, lo, hi, panels) / total;
}

}  // namespace cf
