#include <cmath>
#include <numbers>

#include "cf/error.hpp"
#include "cf/geometry.hpp"
#include "doctest.h"

using namespace cf;

namespace {

constexpr double kPi = std::numbers::pi;

Point cone_point(double t, double phi) { return Point({std::abs(t) * std::cos(phi), std::abs(t) * std::sin(phi)}, t); }

Point solid_point(double t, double r, double phi) { return Point({r * std::cos(phi), r * std::sin(phi)}, t); }

// Brute-force weight mass of the same-sheet ball on the cone (rho = 0, d = 2) by the
// midpoint rule in (t, phi); the density is t^(2 beta) (1-t^2)^(gamma-1/2) t dt dphi.
double cone_ball_grid(const Weight& w, const Point& c, double r, int grid) {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  auto density = [&](double t) { return std::pow(t, 2 * w.beta + 1) * std::pow(1 - t * t, w.gamma - 0.5); };
  double ball = 0.0, total = 0.0;
  const double ht = 1.0 / grid, hp = 2 * kPi / grid;
  for (int i = 0; i < grid; ++i) {
    const double t = (i + 0.5) * ht;
    const double dens = density(t);
    total += dens * grid * hp;
    for (int j = 0; j < grid; ++j) {
      const double phi = (j + 0.5) * hp;
      if (distance(dom, c, cone_point(t, phi)) < r) ball += dens * hp;
    }
  }
  return ball / (2.0 * total);  // two sheets
}

// Same for the solid with density t^(2 beta) (1-t^2)^(gamma-1/2) (t^2-r^2)^(mu-1/2) r dr dphi dt.
double solid_ball_grid(const Weight& w, const Point& c, double rad, int grid) {
  const Domain dom{DomainKind::Solid, 2, 0.0};
  double ball = 0.0, total = 0.0;
  const double ht = 1.0 / grid, hp = 2 * kPi / grid;
  for (int i = 0; i < grid; ++i) {
    const double t = (i + 0.5) * ht;
    const double base = std::pow(t, 2 * w.beta) * std::pow(1 - t * t, w.gamma - 0.5);
    const double hr = t / grid;
    for (int k = 0; k < grid; ++k) {
      const double r = (k + 0.5) * hr;
      const double dens = base * std::pow(t * t - r * r, w.mu - 0.5) * r * hr * ht;
      total += dens * 2 * kPi;
      for (int j = 0; j < grid; ++j) {
        const double phi = (j + 0.5) * hp;
        if (distance(dom, c, solid_point(t, r, phi)) < rad) ball += dens * hp;
      }
    }
  }
  return ball / (2.0 * total);
}

}  // namespace

TEST_CASE("domain membership and validation") {
  const Domain cone{DomainKind::Surface, 2, 0.0};
  CHECK(on_domain(cone, cone_point(0.4, 1.0)));
  CHECK_FALSE(on_domain(cone, Point({0.1, 0.0}, 0.4)));
  const Domain hyp{DomainKind::Surface, 2, 0.5};
  CHECK(on_domain(hyp, Point({std::sqrt(0.64 - 0.25), 0.0}, 0.8)));
  const Domain solid{DomainKind::Solid, 2, 0.0};
  CHECK(on_domain(solid, Point({0.1, 0.2}, -0.5)));
  CHECK_THROWS_AS(require_on_domain(solid, Point({0.6, 0.0}, 0.5)), DomainError);
  CHECK_THROWS_AS(validate(Domain{DomainKind::Surface, 2, -0.1}), ParameterError);
  CHECK_THROWS_AS(validate(cone, Weight{-2.0, 0.5, 0.5}), ParameterError);
}

TEST_CASE("distance is a metric on each sheet") {
  for (const Domain& dom : {Domain{DomainKind::Surface, 2, 0.0}, Domain{DomainKind::Surface, 2, 0.5},
                            Domain{DomainKind::Solid, 2, 0.0}, Domain{DomainKind::Solid, 2, 0.5}}) {
    std::vector<Point> pts;
    for (std::uint64_t i = 1; i <= 24; ++i) {
      Point p = domain_point(dom, halton(i, 2), halton(i, 3), halton(i, 5), halton(i, 7));
      p.t = std::abs(p.t);
      pts.push_back(p);
    }
    for (const auto& p : pts) {
      CHECK(distance(dom, p, p) == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
      for (const auto& q : pts) {
        const double d = distance(dom, p, q);
        CHECK(d >= 0.0);
        CHECK(d <= kPi + 1e-12);
        CHECK(d == doctest::Approx(distance(dom, q, p)));
        for (const auto& s : pts) CHECK(d <= distance(dom, p, s) + distance(dom, s, q) + 1e-9);
      }
    }
  }
}

TEST_CASE("hyperboloid distance refuses cross-sheet pairs") {
  const Domain hyp{DomainKind::Surface, 2, 0.5};
  const Point up({0.0, 0.0}, 0.5), down({0.0, 0.0}, -0.5);
  CHECK_THROWS_AS(distance(hyp, up, down), CrossSheetError);
  const Domain cone{DomainKind::Surface, 2, 0.0};
  CHECK_NOTHROW(distance(cone, cone_point(0.5, 0.0), cone_point(-0.5, 0.0)));
}

TEST_CASE("rho lift preserves distance") {
  for (DomainKind kind : {DomainKind::Surface, DomainKind::Solid}) {
    const Domain d0{kind, 2, 0.0}, d1{kind, 2, 0.7};
    for (std::uint64_t i = 1; i <= 10; ++i) {
      Point p = domain_point(d0, halton(i, 2), halton(i, 3), halton(i, 5), 0.2);
      Point q = domain_point(d0, halton(i + 50, 2), halton(i + 50, 3), halton(i + 50, 5), 0.3);
      const Point lp = rho_lift(p, 0.0, 0.7), lq = rho_lift(q, 0.0, 0.7);
      CHECK(on_domain(d1, lp, 1e-10));
      CHECK(distance(d1, lp, lq) == doctest::Approx(distance(d0, p, q)).epsilon(1e-10));
    }
  }
}

TEST_CASE("surface ball measure matches a brute-force grid") {
  for (const Weight& w : {Weight{0.0, 0.5, 0.0}, Weight{0.0, 1.0, 0.0}, Weight{0.5, 1.5, 0.0}}) {
    for (const auto& [t, r] : {std::pair{0.5, 0.3}, std::pair{0.9, 0.2}, std::pair{0.2, 0.4}}) {
      const Point c = cone_point(t, 0.3);
      const Domain dom{DomainKind::Surface, 2, 0.0};
      CHECK(ball_measure(dom, w, c, r) == doctest::Approx(cone_ball_grid(w, c, r, 1200)).epsilon(5e-3));
    }
  }
}

TEST_CASE("solid ball measure matches a brute-force grid") {
  const Weight w{0.5, 1.0, 1.0};
  const Domain dom{DomainKind::Solid, 2, 0.0};
  const Point c = solid_point(0.6, 0.25, 0.4);
  CHECK(ball_measure(dom, w, c, 0.35) == doctest::Approx(solid_ball_grid(w, c, 0.35, 120)).epsilon(2e-2));
}

TEST_CASE("separated sets on the cone") {
  const Domain cone{DomainKind::Surface, 2, 0.0};
  const SeparatedSet s = build_separated(cone, 0.2);
  CHECK(s.N == 2 * static_cast<int>(std::floor(kPi / 0.4)));
  CHECK(s.evenly_symmetric);
  CHECK(check_even_symmetry(s));
  for (std::size_t i = 0; i < s.size() / 2; ++i) {
    const Point m = s.nodes[i].p.mirrored();
    const Point& q = s.nodes[i + s.size() / 2].p;
    CHECK(m.t == doctest::Approx(q.t));
    CHECK(m.x[0] == doctest::Approx(q.x[0]));
  }
  const SeparationReport rep = verify_separated(s, 2000);
  CHECK(rep.min_distance >= 0.2 * (1 - 1e-12));
  CHECK(rep.min_multiplicity >= 1);
  CHECK(rep.max_multiplicity <= 12);
  CHECK_THROWS_AS(build_separated(cone, 0.0), ParameterError);
}

TEST_CASE("cells partition the domain") {
  for (const Domain& dom : {Domain{DomainKind::Surface, 2, 0.0}, Domain{DomainKind::Solid, 2, 0.0}}) {
    const Weight w{dom.kind == DomainKind::Surface ? 0.0 : 0.5, 1.0, 0.5};
    const SeparatedSet s = build_separated(dom, 0.3);
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double m = cell_measure(s, w, i);
      CHECK(m > 0.0);
      total += m;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t i = 0; i < s.size(); i += 7) CHECK(on_domain(dom, cell_point(s, i, 0.3, 0.6, 0.5), 1e-9));
  }
}

TEST_CASE("Halton sequence values") {
  CHECK(halton(1, 2) == 0.5);
  CHECK(halton(2, 2) == 0.25);
  CHECK(halton(3, 2) == 0.75);
  CHECK(halton(1, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(halton(4, 3) == doctest::Approx(1.0 / 3.0 + 1.0 / 9.0));
}
