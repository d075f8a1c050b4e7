/// \file quadrature.hpp
/// \brief Reference product rules, positive cubature on separated node sets,
/// and Marcinkiewicz-Zygmund sampling checks.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cf/geometry.hpp"

namespace cf {

/// Positive product rule for the normalized weight on the whole domain (both sheets).
struct ReferenceRule {
  Domain dom;
  Weight w;
  int exact_degree = 0;  // exact on polynomials of total degree <= exact_degree
  std::vector<Point> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Rule exact on polynomials of degree <= level (d = 2).
ReferenceRule reference_rule(const Domain& dom, const Weight& w, int level);

using PointFunction = std::function<double(const Point&)>;

/// Throws IntegrationError naming the offending node if f is not finite there.
double reference_integrate(const ReferenceRule& rule, const PointFunction& f);
double reference_integrate(const Domain& dom, const Weight& w, const PointFunction& f, int level);

struct CubatureRule {
  Domain dom;
  Weight w;
  int degree = 0;
  double delta = 0.0;     // node separation is delta / degree
  double residual = 0.0;  // Euclidean norm of the orthonormal moment defect
  SeparatedSet nodes;
  std::vector<double> lambda;

  std::size_t size() const { return lambda.size(); }

  friend bool operator==(const CubatureRule&, const CubatureRule&) = default;
};

/// Positive weights on an evenly symmetric node set, exact on even-in-t
/// polynomials of degree <= n. Throws InfeasibleError when the residual stays
/// above tol or a weight is not positive.
CubatureRule cubature_solve(const Domain& dom, const Weight& w, int n, const SeparatedSet& nodes, double tol);

/// Builds the node set at separation delta / n and retries with halved delta.
CubatureRule cubature_build(const Domain& dom, const Weight& w, int n, double delta, double tol, int retries = 3);

/// Node separation used for degree n at parameter delta, capped at pi/4.
double cubature_separation(int n, double delta);

struct MZReport {
  int n = 0;
  int trials = 0;
  int samples_per_cell = 0;
  double upper_max = 0.0;  // max over trials of sum max|f|^2 |cell| / ||f||^2
  double upper_min = 0.0;
  double lower_max = 0.0;  // max over trials of ||f||^2 / sum min|f|^2 |cell|
  double lower_min = 0.0;
  double upper_inf_max = 0.0;  // max over trials of sup|f| / max over nodes |f|
};

/// Samples random f in the even space of degree <= n (unit-normal coefficients
/// in the orthonormal basis) on each cell of the node set.
MZReport mz_check(const Weight& w, int n, const SeparatedSet& nodes, int trials, std::uint64_t seed,
                  int samples_per_cell = 16);

}  // namespace cf
