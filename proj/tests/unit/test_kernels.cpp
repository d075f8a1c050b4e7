#include <cmath>
#include <numbers>

#include "cf/error.hpp"
#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"
#include "cf/rng.hpp"
#include "doctest.h"

using namespace cf;

namespace {

struct Config {
  Domain dom;
  Weight w;
};

const Config kConfigs[] = {
    {{DomainKind::Surface, 2, 0.0}, {0.0, 0.0, 0.0}},
    {{DomainKind::Surface, 2, 0.5}, {0.0, 1.0, 0.0}},
    {{DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}},
    {{DomainKind::Solid, 2, 0.5}, {0.5, 1.0, 0.0}},
};

Point probe(const Domain& dom, std::uint64_t i) {
  Point p = domain_point(dom, halton(i, 2), halton(i, 3), halton(i, 5), halton(i, 7));
  p.t = std::abs(p.t);
  return p;
}

}  // namespace

TEST_CASE("even space dimensions count the basis") {
  for (const auto& c : kConfigs) {
    const BasisSet b(c.dom, c.w, 6);
    for (int n = 0; n <= 6; ++n) CHECK(b.begin(n + 1) - b.begin(n) == even_space_dim(c.dom.kind, n));
  }
  CHECK(even_space_dim(DomainKind::Surface, 0) == 1);
  CHECK(even_space_dim(DomainKind::Surface, 2) == 3);
  CHECK(even_space_dim(DomainKind::Solid, 2) == 4);
}

TEST_CASE("basis is orthonormal under the reference rule") {
  for (const auto& c : kConfigs) {
    const int n = 5;
    const BasisSet b(c.dom, c.w, n);
    const ReferenceRule rule = reference_rule(c.dom, c.w, 2 * n + 2);
    std::vector<double> gram(b.size() * b.size(), 0.0);
    std::vector<double> v(b.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      b.eval(rule.points[i], v);
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t s = 0; s < v.size(); ++s) gram[r * v.size() + s] += rule.weights[i] * v[r] * v[s];
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t s = 0; s < v.size(); ++s) worst = std::max(worst, std::abs(gram[r * v.size() + s] - (r == s)));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("addition formula agrees with the basis sum") {
  for (const auto& c : kConfigs) {
    const BasisSet b(c.dom, c.w, 8);
    const KernelContext ctx = make_kernel_context(c.dom, c.w, 8);
    for (std::uint64_t i = 1; i <= 6; ++i) {
      const Point p = probe(c.dom, i), q = probe(c.dom, i + 40);
      for (int n = 0; n <= 8; ++n) {
        const double ref = basis_kernel(b, n, p, q);
        CHECK(reprod_kernel(ctx, n, p, q) == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("kernel context requires the admissible beta") {
  CHECK_THROWS_AS(make_kernel_context({DomainKind::Surface, 2, 0.0}, {0.5, 0.5, 0.0}, 4), ParameterError);
  CHECK_THROWS_AS(make_kernel_context({DomainKind::Solid, 2, 0.0}, {0.0, 0.5, 0.5}, 4), ParameterError);
}

TEST_CASE("localized kernel reproduces random polynomials") {
  const CounterRng rng(11);
  for (const auto& c : kConfigs) {
    const int n = 4;
    const BasisSet b(c.dom, c.w, n);
    const ReferenceRule rule = reference_rule(c.dom, c.w, 3 * n + 2);
    const KernelContext ctx = make_kernel_context(c.dom, c.w, 2 * n);
    std::vector<double> coeff(b.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = rng.normal(i);
    auto q = [&](const Point& p) {
      const auto v = b.eval(p);
      double s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) s += coeff[i] * v[i];
      return s;
    };
    const Point p = probe(c.dom, 3);
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      Point y = rule.points[i];
      if (c.dom.rho > 0.0 && y.t < 0.0) y.t = -y.t;
      integral += rule.weights[i] * localized_kernel(ctx, n, Cutoff{}, p, y) * q(rule.points[i]);
    }
    CHECK(integral == doctest::Approx(q(p)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("tabulated kernel series follows the exact profile") {
  const auto& c = kConfigs[0];
  const KernelContext ctx = make_kernel_context(c.dom, c.w, 32);
  const auto a = localized_coefficients(16, Cutoff{});
  const KernelSeries exact(ctx, a), table(ctx, a, 16 * 1024);
  for (double z = -1.0; z <= 1.0; z += 0.0137) CHECK(table.profile(z) == doctest::Approx(exact.profile(z)).epsilon(1e-8).scale(exact.profile(1.0)));
}

TEST_CASE("Christoffel function is the minimal mass of polynomials equal to one at the point") {
  const CounterRng rng(5);
  for (const auto& c : kConfigs) {
    const int n = 5;
    const BasisSet b(c.dom, c.w, n);
    const KernelContext ctx = make_kernel_context(c.dom, c.w, n);
    const Point p = probe(c.dom, 9);
    const double lambda = christoffel(ctx, n, p);
    const auto v = b.eval(p);
    double k = 0.0;
    for (double x : v) k += x * x;
    // minimizer K(., p) / K(p, p) attains the bound
    CHECK(lambda == doctest::Approx(1.0 / k).epsilon(1e-10));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> coeff(v.size());
      double at = 0.0, mass = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        coeff[i] = rng.normal(static_cast<std::uint64_t>(trial) * 1000 + i);
        at += coeff[i] * v[i];
      }
      for (double& x : coeff) mass += (x / at) * (x / at);
      CHECK(mass >= lambda * (1 - 1e-12));
    }
  }
}

TEST_CASE("spectral eigenvalues") {
  const Domain s{DomainKind::Surface, 2, 0.0}, b{DomainKind::Solid, 2, 0.0};
  const Weight w{0.5, 1.0, 0.5};
  for (int n = 0; n <= 6; ++n) {
    CHECK(spectral_eigenvalue(s, w, n) == doctest::Approx(n * (n + 2.0 * w.gamma + 2 - 1)));
    CHECK(spectral_eigenvalue(b, w, n) == doctest::Approx(n * (n + 2.0 * w.gamma + 2.0 * w.mu + 2)));
  }
}

TEST_CASE("derivative kernel drops the constant term") {
  const auto& c = kConfigs[0];
  const KernelContext ctx = make_kernel_context(c.dom, c.w, 8);
  const Point p = probe(c.dom, 2), q = probe(c.dom, 7);
  std::vector<double> coeff = localized_coefficients(4, Cutoff{});
  for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] *= spectral_eigenvalue(c.dom, c.w, static_cast<int>(k));
  CHECK(coeff[0] == 0.0);
  CHECK(derivative_kernel(ctx, 4, Cutoff{}, 2.0, p, q) == doctest::Approx(series_kernel(ctx, coeff, p, q)));
  CHECK_THROWS_AS(derivative_kernel(ctx, 4, Cutoff{}, 0.0, p, q), ParameterError);
}

TEST_CASE("needle polynomial peaks at its centre") {
  for (const Domain& dom : {Domain{DomainKind::Surface, 2, 0.0}, Domain{DomainKind::Surface, 2, 0.5},
                            Domain{DomainKind::Solid, 2, 0.0}}) {
    const Point centre = probe(dom, 4);
    const NeedlePolynomial needle(dom, centre, 12, 2);
    CHECK(needle(centre) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::uint64_t i = 1; i <= 200; ++i) {
      const double v = needle(probe(dom, i));
      CHECK(v >= -1e-14);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
  const NeedlePolynomial needle({DomainKind::Surface, 2, 0.0}, Point({0.5, 0.0}, 0.5), 12, 2);
  CHECK(needle.profile(1.0) == doctest::Approx(1.0));
  const double a = 12 / 2 + 1 + 0.5;  // m + 1/2 with m = n/r + 1
  CHECK(needle.profile(-1.0) == doctest::Approx(std::pow(std::sin(a * std::numbers::pi / 2) / a, 4)));
}
