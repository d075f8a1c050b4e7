#include "cf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cf/error.hpp"

namespace cf {

namespace {

// base^e for base >= 0 with 0^negative = +inf.
double pow0(double base, double e) {
  base = std::max(base, 0.0);
  if (base == 0.0) {
    if (e < 0.0) return std::numeric_limits<double>::infinity();
    return e == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(base, e);
}

}  // namespace

void validate(const Domain& dom) {
  if (dom.d < 2) throw ParameterError("base dimension d must be at least 2");
  if (dom.d + 2 > kMaxDim) throw ParameterError("base dimension d too large (max " + std::to_string(kMaxDim - 2) + ")");
  if (!(dom.rho >= 0.0)) throw ParameterError("rho must be non-negative");
}

void validate(const Domain& dom, const Weight& w) {
  validate(dom);
  if (!(w.gamma > -0.5)) throw ParameterError("gamma must exceed -1/2");
  const double beta_min = dom.rho > 0.0 ? -0.5 : -(dom.d + 1) / 2.0;
  if (!(w.beta > beta_min)) throw ParameterError("beta below integrability threshold");
  if (dom.kind == DomainKind::Solid && !(w.mu > -0.5)) throw ParameterError("mu must exceed -1/2");
}

Point::Point(std::span<const double> xs, double tv) : dim(static_cast<int>(xs.size())), t(tv) {
  if (xs.size() > static_cast<std::size_t>(kMaxDim)) throw ParameterError("point dimension too large");
  std::copy(xs.begin(), xs.end(), x.begin());
}

Point::Point(std::initializer_list<double> xs, double tv)
    : Point(std::span<const double>(xs.begin(), xs.size()), tv) {}

double Point::norm2() const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  return s;
}

Point Point::mirrored() const {
  Point q = *this;
  for (int i = 0; i < dim; ++i) q.x[static_cast<std::size_t>(i)] = -q.x[static_cast<std::size_t>(i)];
  q.t = -t;
  return q;
}

double dot(const Point& p, const Point& q) {
  double s = 0.0;
  const int n = std::min(p.dim, q.dim);
  for (int i = 0; i < n; ++i) s += p.x[static_cast<std::size_t>(i)] * q.x[static_cast<std::size_t>(i)];
  return s;
}

bool on_domain(const Domain& dom, const Point& p, double tol) {
  if (p.dim != dom.d) return false;
  const double at = std::abs(p.t);
  const double r2 = dom.rho * dom.rho;
  if (at < dom.rho - tol || at > std::sqrt(1.0 + r2) + tol) return false;
  const double gap = p.t * p.t - r2 - p.norm2();
  if (dom.kind == DomainKind::Surface) return std::abs(gap) <= tol;
  return gap >= -tol;
}

void require_on_domain(const Domain& dom, const Point& p, double tol) {
  if (!on_domain(dom, p, tol)) {
    throw DomainError("point (t=" + std::to_string(p.t) + ", |x|^2=" + std::to_string(p.norm2()) +
                      ") is not on the domain");
  }
}

double distance(const Domain& dom, const Point& p, const Point& q) {
  const double r2 = dom.rho * dom.rho;
  if (dom.rho > 0.0 && ((p.t > 0.0) != (q.t > 0.0))) {
    throw CrossSheetError("distance between different sheets of the hyperboloid is undefined");
  }
  double c = dot(p, q) + std::sqrt(std::max(0.0, 1.0 + r2 - p.t * p.t)) *
                             std::sqrt(std::max(0.0, 1.0 + r2 - q.t * q.t));
  if (dom.kind == DomainKind::Solid) {
    c += std::sqrt(std::max(0.0, p.t * p.t - r2 - p.norm2())) *
         std::sqrt(std::max(0.0, q.t * q.t - r2 - q.norm2()));
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Point rho_lift(const Point& p, double from_rho, double to_rho) {
  if (from_rho == to_rho) return p;
  const double r = p.t * p.t - from_rho * from_rho + to_rho * to_rho;
  if (r < -1e-12) throw DomainError("rho_lift: negative radicand");
  Point q = p;
  q.t = std::copysign(std::sqrt(std::max(0.0, r)), p.t);
  return q;
}

double weight_eval(const Domain& dom, const Weight& w, const Point& p) {
  const double r2 = dom.rho * dom.rho;
  const double s2 = p.t * p.t - r2;
  double v;
  if (dom.rho == 0.0) {
    v = pow0(std::abs(p.t), 2.0 * w.beta);
  } else {
    v = std::abs(p.t) * pow0(s2, w.beta - 0.5);
  }
  v *= pow0(1.0 + r2 - p.t * p.t, w.gamma - 0.5);
  if (dom.kind == DomainKind::Solid) v *= pow0(s2 - p.norm2(), w.mu - 0.5);
  return v;
}

double wn_eval(const Domain& dom, const Weight& w, double n, const Point& p) {
  const double r2 = dom.rho * dom.rho;
  const double h = 1.0 / (n * n);
  const double s2 = std::max(0.0, p.t * p.t - r2);
  const double c2 = std::max(0.0, 1.0 + r2 - p.t * p.t);
  if (dom.kind == DomainKind::Surface) return std::pow(s2 + h, w.beta) * std::pow(c2 + h, w.gamma);
  const double l2 = std::max(0.0, s2 - p.norm2());
  return std::pow(s2 + h, w.beta - 0.5) * std::pow(c2 + h, w.gamma) * std::pow(l2 + h, w.mu);
}

double ball_comparison(const Domain& dom, const Weight& w, const Point& p, double r) {
  const Point c = rho_lift(p, dom.rho, 0.0);
  const double t2 = c.t * c.t, r2 = r * r;
  if (dom.kind == DomainKind::Surface) {
    return std::pow(r, dom.d) * std::pow(t2 + r2, w.beta) * std::pow(1.0 - t2 + r2, w.gamma);
  }
  const double l2 = std::max(0.0, t2 - c.norm2());
  return std::pow(r, dom.d + 1) * std::pow(t2 + r2, w.beta - 0.5) * std::pow(1.0 - t2 + r2, w.gamma) *
         std::pow(l2 + r2, w.mu);
}

double halton(std::uint64_t i, int base) {
  double f = 1.0, r = 0.0;
  const auto b = static_cast<std::uint64_t>(base);
  while (i > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(i % b);
    i /= b;
  }
  return r;
}

Point domain_point(const Domain& dom, double u1, double u2, double u3, double u4) {
  const double theta = u1 * std::numbers::pi / 2.0;
  const double s = std::cos(theta);
  const double phi = 2.0 * std::numbers::pi * u2;
  double rel = 1.0;
  if (dom.kind == DomainKind::Solid) rel = std::sin(u3 * std::numbers::pi / 2.0);
  std::array<double, kMaxDim> xs{};
  xs[0] = s * rel * std::cos(phi);
  xs[1] = s * rel * std::sin(phi);
  const double sheet = u4 < 0.5 ? 1.0 : -1.0;
  Point p(std::span<const double>(xs.data(), static_cast<std::size_t>(dom.d)), sheet * s);
  if (sheet < 0.0) {
    for (int i = 0; i < dom.d; ++i) p.x[static_cast<std::size_t>(i)] = -p.x[static_cast<std::size_t>(i)];
  }
  return rho_lift(p, 0.0, dom.rho);
}

}  // namespace cf
