#include <algorithm>
#include <cmath>
#include <numbers>

#include "cf/error.hpp"
#include "cf/orthopoly.hpp"
#include "doctest.h"

using namespace cf;

namespace {

// P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s), in extended precision.
long double gbinom(long double top, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r *= (top - k + i) / i;
  return r;
}

double jacobi_series(int n, double a, double b, double x) {
  long double s = 0.0L;
  for (int k = 0; k <= n; ++k) {
    s += gbinom(n + static_cast<long double>(a), n - k) * gbinom(n + static_cast<long double>(b), k) *
         std::pow((x - 1.0L) / 2.0L, k) * std::pow((x + 1.0L) / 2.0L, n - k);
  }
  return static_cast<double>(s);
}

// C_n^lambda(x) = sum_k (-1)^k Gamma(n-k+lambda) / (Gamma(lambda) k! (n-2k)!) (2x)^(n-2k).
double gegenbauer_series(int n, double lambda, double x) {
  double s = 0.0;
  for (int k = 0; 2 * k <= n; ++k) {
    const double lg = std::lgamma(n - k + lambda) - std::lgamma(lambda) - std::lgamma(k + 1.0) - std::lgamma(n - 2 * k + 1.0);
    s += (k % 2 ? -1.0 : 1.0) * std::exp(lg) * std::pow(2.0 * x, n - 2 * k);
  }
  return s;
}

// Moments of the normalized Jacobi measure: x = 2y - 1 with y ~ Beta(b+1, a+1). The
// binomial expansion cancels, so it is summed in extended precision for small k only.
double jacobi_moment(int k, double a, double b) {
  long double s = 0.0L;
  long double binom = 1.0L;
  for (int i = 0; i <= k; ++i) {
    long double ey = 1.0L;
    for (int r = 0; r < i; ++r) ey *= (b + 1.0L + r) / (a + b + 2.0L + r);
    s += binom * std::pow(2.0L, i) * ((k - i) % 2 ? -1.0L : 1.0L) * ey;
    binom = binom * (k - i) / (i + 1.0L);
  }
  return static_cast<double>(s);
}

// h_n for the probability-normalized weight, through log-gamma.
double jacobi_norm_closed(int n, double a, double b) {
  const double lognum = std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) - std::lgamma(n + 1.0);
  const double logbeta = std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0);
  if (n == 0) return 1.0;
  return std::exp(lognum - logbeta) / (2.0 * n + a + b + 1.0);
}

const JacobiParams kParams[] = {{0.0, 0.0}, {0.5, 0.5}, {-0.5, 1.5}, {1.0, 0.0}, {2.5, -0.3}};

}  // namespace

TEST_CASE("Jacobi recurrence matches the explicit sum") {
  for (const auto& p : kParams) {
    for (int n = 0; n <= 12; ++n) {
      for (int i = 0; i < 20; ++i) {
        const double x = -0.97 + 1.94 * i / 19.0;
        const double ref = jacobi_series(n, p.alpha, p.beta, x);
        CHECK(jacobi_eval(n, p, x) == doctest::Approx(ref).epsilon(1e-11).scale(1.0));
      }
      CHECK(jacobi_at_one(n, p) == doctest::Approx(jacobi_series(n, p.alpha, p.beta, 1.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("jacobi_all agrees with single evaluations") {
  const JacobiParams p{0.5, 1.5};
  const auto all = jacobi_all(9, p, 0.3);
  REQUIRE(all.size() == 10);
  for (int n = 0; n <= 9; ++n) CHECK(all[static_cast<std::size_t>(n)] == doctest::Approx(jacobi_eval(n, p, 0.3)));
}

TEST_CASE("Jacobi norms match the closed form") {
  for (const auto& p : kParams) {
    for (int n = 0; n <= 10; ++n) {
      CHECK(jacobi_norm(n, p) == doctest::Approx(jacobi_norm_closed(n, p.alpha, p.beta)).epsilon(1e-11));
    }
  }
}

TEST_CASE("Gauss-Jacobi rules integrate moments exactly to degree 2m-1") {
  for (const auto& p : kParams) {
    for (int m : {1, 3, 8, 15}) {
      const QuadRule1D rule = gauss_jacobi(m, p);
      REQUIRE(rule.size() == m);
      double wsum = 0.0;
      for (int i = 0; i < m; ++i) {
        CHECK(rule.weights[static_cast<std::size_t>(i)] > 0.0);
        if (i > 0) CHECK(rule.nodes[static_cast<std::size_t>(i)] > rule.nodes[static_cast<std::size_t>(i - 1)]);
        wsum += rule.weights[static_cast<std::size_t>(i)];
      }
      CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
      for (int k = 0; k <= std::min(2 * m - 1, 10); ++k) {
        double q = 0.0;
        for (int i = 0; i < m; ++i) q += rule.weights[static_cast<std::size_t>(i)] * std::pow(rule.nodes[static_cast<std::size_t>(i)], k);
        CHECK(q == doctest::Approx(jacobi_moment(k, p.alpha, p.beta)).epsilon(1e-12).scale(1.0));
      }
      for (int j = 0; j < m; ++j) {
        for (int k = 0; j + k <= 2 * m - 1; ++k) {
          double q = 0.0;
          for (int i = 0; i < m; ++i) {
            const double x = rule.nodes[static_cast<std::size_t>(i)];
            q += rule.weights[static_cast<std::size_t>(i)] * jacobi_eval(j, p, x) * jacobi_eval(k, p, x);
          }
          const double ref = j == k ? jacobi_norm_closed(j, p.alpha, p.beta) : 0.0;
          CHECK(q == doctest::Approx(ref).epsilon(1e-11).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("Z_n^lambda matches the explicit Gegenbauer sum") {
  for (double lambda : {0.5, 1.0, 1.5, 2.25}) {
    for (int n = 0; n <= 10; ++n) {
      for (double x : {-0.9, -0.2, 0.0, 0.45, 1.0}) {
        const double ref = (n + lambda) / lambda * gegenbauer_series(n, lambda, x);
        CHECK(gegenbauer_Z(n, lambda, x) == doctest::Approx(ref).epsilon(1e-11).scale(1.0));
      }
    }
  }
}

TEST_CASE("invalid Jacobi parameters are rejected") {
  CHECK_THROWS_AS(validate(JacobiParams{-1.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(gauss_jacobi(4, {0.0, -1.5}), ParameterError);
}

TEST_CASE("smooth step and cut-offs") {
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  for (double s = 0.05; s < 1.0; s += 0.05) CHECK(smooth_step(s) + smooth_step(1.0 - s) == doctest::Approx(1.0));
  const Cutoff a{CutoffKind::TypeA};
  CHECK(cutoff_eval(a, 0.7) == 1.0);
  CHECK(cutoff_eval(a, 2.5) == 0.0);
  for (double t = 1.0; t < 2.0; t += 0.1) CHECK(cutoff_eval(a, t + 0.05) <= cutoff_eval(a, t));
  const Cutoff b{CutoffKind::TypeB};
  CHECK(cutoff_eval(b, 0.4) == 0.0);
  CHECK(cutoff_eval(b, 2.1) == 0.0);
  for (double t = 0.5; t <= 1.0; t += 0.05) {
    CHECK(cutoff_eval(b, t) * cutoff_eval(b, t) + cutoff_eval(b, 2 * t) * cutoff_eval(b, 2 * t) == doctest::Approx(1.0));
  }
}

TEST_CASE("dyadic windows telescope to the low-pass profile") {
  const Cutoff a{CutoffKind::TypeA};
  for (int J = 0; J <= 5; ++J) {
    for (double t = 0.0; t <= 80.0; t += 0.37) {
      double s = 0.0;
      for (int j = 0; j <= J; ++j) s += window_eval(j, t) * window_eval(j, t);
      CHECK(s == doctest::Approx(cutoff_eval(a, t / std::ldexp(1.0, J))).epsilon(1e-13));
    }
  }
}

TEST_CASE("one-variable localized kernel reproduces low degrees") {
  const Cutoff a{CutoffKind::TypeA};
  for (const auto& p : kParams) {
    const int n = 6;
    const QuadRule1D rule = gauss_jacobi(2 * n + 4, p);
    for (int k = 0; k <= n; ++k) {
      double s = 0.0;
      for (int i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[static_cast<std::size_t>(i)];
        s += rule.weights[static_cast<std::size_t>(i)] * kernel1d(n, p, a, x) * jacobi_eval(k, p, x);
      }
      CHECK(s == doctest::Approx(jacobi_at_one(k, p)).epsilon(1e-11));
    }
  }
}
