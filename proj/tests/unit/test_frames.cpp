#include <cmath>

#include "cf/error.hpp"
#include "cf/frames.hpp"
#include "cf/rng.hpp"
#include "doctest.h"

using namespace cf;

TEST_CASE("frame windows partition unity up to the band limit") {
  for (int J = 1; J <= 5; ++J) {
    const int limit = frame_band_limit(J);
    for (int k = 0; k <= limit; ++k) {
      double s = 0.0;
      for (int j = 0; j <= J; ++j) s += frame_window(j, k) * frame_window(j, k);
      CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    }
    double beyond = 0.0;
    for (int j = 0; j <= J; ++j) beyond += frame_window(j, 4 << J) * frame_window(j, 4 << J);
    CHECK(beyond == 0.0);
  }
  CHECK(frame_window(0, 0) == 1.0);
  CHECK(frame_window(3, 0) == 0.0);
}

TEST_CASE("frame is tight on band-limited coefficients") {
  const CounterRng rng(3);
  for (const Domain& dom : {Domain{DomainKind::Surface, 2, 0.0}, Domain{DomainKind::Solid, 2, 0.0}}) {
    const Weight w = dom.kind == DomainKind::Surface ? Weight{0.0, 1.0, 0.0} : Weight{0.5, 0.5, 0.5};
    const Frame fr = build_frame(dom, w, 2, 1.0);
    REQUIRE(fr.levels.size() == 3);
    const BasisSet basis(dom, w, frame_band_limit(2));
    std::vector<double> coeff(basis.size());
    double energy = 0.0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      coeff[i] = rng.normal(i);
      energy += coeff[i] * coeff[i];
    }
    const FrameCoefficients fc = frame_analyze(fr, coeff);
    CHECK(fc.energy() == doctest::Approx(energy).epsilon(1e-10));
    const auto back = frame_synthesize(fr, fc);
    REQUIRE(back.size() == coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) CHECK(back[i] == doctest::Approx(coeff[i]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("frame elements match their basis expansion") {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  const Weight w{0.0, 1.0, 0.0};
  const Frame fr = build_frame(dom, w, 2, 1.0);
  const BasisSet basis(dom, w, 4);
  const Point p({0.3, 0.4}, 0.5);
  for (int j = 0; j <= 2; ++j) {
    const auto& lvl = fr.levels[static_cast<std::size_t>(j)];
    for (std::size_t node : {std::size_t{0}, lvl.rule.size() / 3}) {
      const auto a = basis.eval(p), b = basis.eval(lvl.rule.nodes.nodes[node].p);
      double ref = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) ref += frame_window(j, basis.indices()[k].n) * a[k] * b[k];
      ref *= std::sqrt(lvl.rule.lambda[node]);
      CHECK(frame_element(fr, j, node, p) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
    }
  }
  CHECK_THROWS_AS(frame_element(fr, 3, 0, p), ParameterError);
}

TEST_CASE("point-function analysis matches coefficient analysis") {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  const Weight w{0.0, 1.0, 0.0};
  const Frame fr = build_frame(dom, w, 2, 1.0);
  const BasisSet basis(dom, w, frame_band_limit(2));
  const auto f = [](const Point& p) { return 1.0 + p.x[0] * p.x[1] + 0.5 * p.t * p.t; };
  std::vector<double> coeff(basis.size(), 0.0);
  const ReferenceRule rule = reference_rule(dom, w, 12);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto v = basis.eval(rule.points[i]);
    for (std::size_t k = 0; k < v.size(); ++k) coeff[k] += rule.weights[i] * f(rule.points[i]) * v[k];
  }
  const FrameCoefficients a = frame_analyze(fr, PointFunction(f)), b = frame_analyze(fr, coeff);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t l = 0; l < a.levels.size(); ++l)
    for (std::size_t i = 0; i < a.levels[l].size(); ++i)
      CHECK(a.levels[l][i] == doctest::Approx(b.levels[l][i]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("frame analysis rejects functions odd in t") {
  const Domain dom{DomainKind::Surface, 2, 0.0};
  CHECK_THROWS_AS(require_even(dom, [](const Point& p) { return p.t; }), SymmetryError);
  CHECK_NOTHROW(require_even(dom, [](const Point& p) { return p.t * p.t; }));
  CHECK_THROWS_AS(build_frame(dom, Weight{}, 7, 1.0), ParameterError);
}
