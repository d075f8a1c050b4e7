#include <cmath>

#include "cf/error.hpp"
#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"
#include "doctest.h"

using namespace cf;

namespace {

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

// E[t^(2k)]: t^2 is Beta(a, gamma + 1/2) distributed with a = beta + d/2 (+ mu in the solid).
double t_moment(const Domain& dom, const Weight& w, int k) {
  const double a = w.beta + dom.d / 2.0 + (dom.kind == DomainKind::Solid ? w.mu : 0.0);
  return beta_fn(k + a, w.gamma + 0.5) / beta_fn(a, w.gamma + 0.5);
}

}  // namespace

TEST_CASE("reference rule integrates radial moments exactly") {
  const Domain surface{DomainKind::Surface, 2, 0.0}, solid{DomainKind::Solid, 2, 0.0};
  for (const Weight& w : {Weight{0.0, 0.5, 0.5}, Weight{0.5, 1.0, 0.5}, Weight{1.0, 0.0, 1.5}}) {
    for (const Domain& dom : {surface, solid}) {
      const ReferenceRule rule = reference_rule(dom, w, 12);
      double total = 0.0;
      for (double x : rule.weights) {
        CHECK(x > 0.0);
        total += x;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
      for (int k = 1; k <= 6; ++k) {
        const double m = reference_integrate(rule, [k](const Point& p) { return std::pow(p.t, 2 * k); });
        CHECK(m == doctest::Approx(t_moment(dom, w, k)).epsilon(1e-12));
      }
      for (const Point& p : rule.points) CHECK(on_domain(dom, p, 1e-10));
    }
    const double x1 = reference_integrate(surface, w, [](const Point& p) { return p.x[0] * p.x[0]; }, 6);
    CHECK(x1 == doctest::Approx(t_moment(surface, w, 1) / 2.0).epsilon(1e-12));
    const double odd = reference_integrate(surface, w, [](const Point& p) { return p.t * p.x[1]; }, 6);
    CHECK(std::abs(odd) < 1e-14);
  }
}

TEST_CASE("reference integration reports non-finite integrands") {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  CHECK_THROWS_AS(reference_integrate(dom, Weight{}, [](const Point&) { return std::nan(""); }, 4), IntegrationError);
}

TEST_CASE("cubature separation is capped") {
  CHECK(cubature_separation(8, 1.0) == doctest::Approx(1.0 / 8));
  CHECK(cubature_separation(1, 1.0) == doctest::Approx(std::acos(-1.0) / 4));
  CHECK(cubature_separation(16, 0.5) == doctest::Approx(0.5 / 16));
}

TEST_CASE("positive cubature is exact on the even space") {
  struct Case {
    Domain dom;
    Weight w;
    int n;
  };
  for (const Case& c : {Case{{DomainKind::Surface, 2, 0.0}, {0.0, 0.5, 0.0}, 6},
                        Case{{DomainKind::Surface, 2, 0.5}, {0.5, 1.0, 0.0}, 6},
                        Case{{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, 4}}) {
    const CubatureRule rule = cubature_build(c.dom, c.w, c.n, 1.0, 1e-10);
    CHECK(rule.nodes.evenly_symmetric);
    CHECK(rule.residual <= 1e-10);
    const BasisSet basis(c.dom, c.w, c.n);
    std::vector<double> moment(basis.size(), 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(rule.lambda[i] > 0.0);
      const auto v = basis.eval(rule.nodes.nodes[i].p);
      for (std::size_t k = 0; k < v.size(); ++k) moment[k] += rule.lambda[i] * v[k];
    }
    CHECK(moment[0] == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t k = 1; k < moment.size(); ++k) CHECK(std::abs(moment[k]) < 1e-9);
  }
}

TEST_CASE("cubature rejects bad parameters") {
  CHECK_THROWS_AS(cubature_build({DomainKind::Surface, 2, 0.0}, Weight{}, -1, 1.0, 1e-10), ParameterError);
  CHECK_THROWS_AS(cubature_build({DomainKind::Surface, 2, 0.0}, Weight{}, 4, -1.0, 1e-10), ParameterError);
}

TEST_CASE("MZ ratios bracket one on a fine node set") {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  const Weight w{0.0, 1.0, 0.0};
  const SeparatedSet nodes = build_separated(dom, cubature_separation(8, 0.5));
  const MZReport r = mz_check(w, 8, nodes, 5, 7);
  CHECK(r.trials == 5);
  CHECK(r.upper_min >= 0.9);
  CHECK(r.lower_min >= 0.9);
  CHECK(r.upper_max >= r.upper_min);
  CHECK(r.lower_max < 4.0);
  CHECK(r.upper_inf_max >= 1.0);
  const MZReport again = mz_check(w, 8, nodes, 5, 7);
  CHECK(again.upper_max == r.upper_max);
}
