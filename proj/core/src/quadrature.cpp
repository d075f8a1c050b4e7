#include <cmath>
#include <numbers>
#include <string>

#include "cf/error.hpp"
#include "cf/orthopoly.hpp"
#include "cf/quadrature.hpp"

namespace cf {

ReferenceRule reference_rule(const Domain& dom, const Weight& w, int level) {
  validate(dom, w);
  if (dom.d != 2) throw ParameterError("reference rules are implemented for d = 2");
  if (level < 0) throw ParameterError("negative reference level");
  const bool solid = dom.kind == DomainKind::Solid;
  const int mu_count = level / 4 + 2;
  const int angles = level + 2;
  const double radial_b = solid ? w.beta + w.mu + dom.d / 2.0 - 1.0 : w.beta + dom.d / 2.0 - 1.0;
  const QuadRule1D radial = gauss_jacobi(mu_count, {w.gamma - 0.5, radial_b});
  QuadRule1D ball;
  if (solid) ball = gauss_jacobi(mu_count, {w.mu - 0.5, 0.0});

  ReferenceRule rule;
  rule.dom = dom;
  rule.w = w;
  rule.exact_degree = level;
  const std::size_t per_sheet =
      static_cast<std::size_t>(radial.size()) * static_cast<std::size_t>(angles) * (solid ? static_cast<std::size_t>(ball.size()) : 1);
  rule.points.reserve(2 * per_sheet);
  rule.weights.reserve(2 * per_sheet);
  for (int sheet : {1, -1}) {
    for (int i = 0; i < radial.size(); ++i) {
      const double s = std::sqrt(0.5 * (1.0 + radial.nodes[static_cast<std::size_t>(i)]));
      const double t = sheet * std::sqrt(s * s + dom.rho * dom.rho);
      const double wi = 0.5 * radial.weights[static_cast<std::size_t>(i)] / angles;
      for (int k = 0; k < angles; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / angles;
        const double c = std::cos(phi), sn = std::sin(phi);
        if (!solid) {
          rule.points.emplace_back(std::initializer_list<double>{s * c, s * sn}, t);
          rule.weights.push_back(wi);
          continue;
        }
        for (int b = 0; b < ball.size(); ++b) {
          const double r = s * std::sqrt(0.5 * (1.0 + ball.nodes[static_cast<std::size_t>(b)]));
          rule.points.emplace_back(std::initializer_list<double>{r * c, r * sn}, t);
          rule.weights.push_back(wi * ball.weights[static_cast<std::size_t>(b)]);
        }
      }
    }
  }
  return rule;
}

double reference_integrate(const ReferenceRule& rule, const PointFunction& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    const double v = f(rule.points[i]);
    if (!std::isfinite(v)) {
      const Point& p = rule.points[i];
      throw IntegrationError("integrand not finite at node " + std::to_string(i) + " (x = " + std::to_string(p.x[0]) +
                             ", " + std::to_string(p.x[1]) + ", t = " + std::to_string(p.t) + ")");
    }
    sum += rule.weights[i] * v;
  }
  return sum;
}

double reference_integrate(const Domain& dom, const Weight& w, const PointFunction& f, int level) {
  return reference_integrate(reference_rule(dom, w, level), f);
}

}  // namespace cf
