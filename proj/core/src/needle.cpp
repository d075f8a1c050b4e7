#include <algorithm>
#include <array>
#include <cmath>

#include "cf/error.hpp"
#include "cf/kernels.hpp"

namespace cf {

NeedlePolynomial::NeedlePolynomial(const Domain& dom, const Point& centre, int n, int r)
    : dom_(dom), centre_(centre), n_(n), r_(r), m_(n / std::max(r, 1) + 1) {
  validate(dom);
  if (n < 2) throw ParameterError("needle polynomial needs n >= 2");
  if (r < 1) throw ParameterError("needle decay order must be positive");
  require_on_domain(dom, centre);
}

double NeedlePolynomial::profile(double z) const {
  z = std::clamp(z, -1.0, 1.0);
  const double psi = 0.5 * std::acos(z);
  const double a = m_ + 0.5;
  const double s = std::sin(psi);
  // Fejer-type ratio; its limit at psi = 0 is 1
  const double ratio = s < 1e-300 ? 1.0 : std::sin(a * psi) / (a * s);
  return std::pow(ratio, 2 * r_);
}

// Surface needle at the cone-lifted parameter; x, y live in any dimension.
double NeedlePolynomial::surface_value(std::span<const double> x, double t, std::span<const double> y,
                                       double s) const {
  const double rho2 = dom_.rho * dom_.rho;
  double xy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
  const double b = std::sqrt(std::max(0.0, 1.0 + rho2 - t * t)) * std::sqrt(std::max(0.0, 1.0 + rho2 - s * s));
  return (profile(xy + b) + profile(xy - b)) / (1.0 + profile(2.0 * t * t - 2.0 * rho2 - 1.0));
}

double NeedlePolynomial::operator()(const Point& q) const {
  if (q.dim != dom_.d) throw ParameterError("point dimension does not match domain");
  const auto x = centre_.coords();
  const auto y = q.coords();
  if (dom_.kind == DomainKind::Surface) return surface_value(x, centre_.t, y, q.t);

  const double rho2 = dom_.rho * dom_.rho;
  const auto lifted = [&](std::span<const double> v, double t, double sign) {
    std::array<double, kMaxDim + 1> out{};
    double v2 = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = v[i];
      v2 += v[i] * v[i];
    }
    out[v.size()] = sign * std::sqrt(std::max(0.0, t * t - rho2 - v2));
    return out;
  };
  const std::size_t n1 = x.size() + 1;
  const auto X = lifted(x, centre_.t, 1.0);
  const auto Xs = lifted(x, centre_.t, -1.0);
  const auto Y = lifted(y, q.t, 1.0);
  const auto Ys = lifted(y, q.t, -1.0);
  const std::span<const double> sx(X.data(), n1), sxs(Xs.data(), n1), sy(Y.data(), n1), sys(Ys.data(), n1);
  const double num = surface_value(sx, centre_.t, sy, q.t) + surface_value(sx, centre_.t, sys, q.t);
  return num / (1.0 + surface_value(sx, centre_.t, sxs, centre_.t));
}

}  // namespace cf
