/// \file approx.hpp
/// \brief Orthogonal expansions of even-in-t functions, near-best operators,
/// spectral multipliers, moduli of smoothness and K-functionals.
#pragma once

#include <functional>
#include <vector>

#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"

namespace cf {

/// Coefficients of f in the orthonormal basis of degree <= N, plus the squared
/// norm of f itself.
struct ProjectionSeries {
  Domain dom;
  Weight w;
  int N = 0;
  std::vector<double> coeff;  // BasisSet order
  double norm2 = 0.0;

  /// ||proj_n f||^2.
  double degree_energy(int n) const;
  std::vector<double> degree_energies() const;
};

/// Reference rule level 0 picks 2N + 8.
ProjectionSeries project(const Domain& dom, const Weight& w, const PointFunction& f, int N, int level = 0);

/// Series with the given coefficients; norm2 is the coefficient energy.
ProjectionSeries make_series(const Domain& dom, const Weight& w, int N, std::vector<double> coeff);

double series_eval(const ProjectionSeries& s, const Point& p);

using DegreeMultiplier = std::function<double(int)>;

ProjectionSeries multiplier_apply(const ProjectionSeries& s, const DegreeMultiplier& m);

/// m(n) of the translation operator S_theta; |m| <= 1 and m(n) = 1 at theta = 0.
double translation_multiplier(const Domain& dom, const Weight& w, double theta, int n);

/// (I - S_theta)^(r/2) multiplier.
DegreeMultiplier difference_multiplier(const Domain& dom, const Weight& w, double theta, double r);

/// (-D)^(r/2) multiplier, mu(n)^(r/2).
DegreeMultiplier spectral_multiplier(const Domain& dom, const Weight& w, double r);

/// L_n * f in coefficient form: sum_k a(k/n) proj_k f (degree <= 2n).
ProjectionSeries near_best(const ProjectionSeries& s, int n, const Cutoff& c);

/// Discrete form: proj_k f replaced by the cubature sum sum_z lambda_z f(z) Phi(z);
/// the rule should be exact on degree 4n.
ProjectionSeries near_best_discrete(const CubatureRule& rule, const PointFunction& f, int n, const Cutoff& c);

/// L2 best-approximation error E_n(f)_2 from the expansion tail.
double best_error_l2(const ProjectionSeries& s, int n);

/// ||f - L_n f||_2 from degree energies.
double near_best_error_l2(const ProjectionSeries& s, int n, const Cutoff& c);

/// Upper estimate of E_n(f)_p, p = 1 or infinity (p <= 0), through the near-best
/// operator of index n/2 evaluated on a reference rule.
double best_error_upper(const Domain& dom, const Weight& w, const PointFunction& f, const ProjectionSeries& s,
                        int n, double p, int level);

/// omega_r(f; theta) = sup_{0 < t <= theta} ||(I - S_t)^(r/2) f||_2 over `steps` points.
double modulus(const ProjectionSeries& s, double r, double theta, int steps = 16);

/// K-functional surrogate inf_g ||f - g||_2 + t^r ||(-D)^(r/2) g||_2 over g = 0 and
/// g = L_m f, m dyadic up to N.
double k_functional(const ProjectionSeries& s, double r, double t);

struct SpectralReport {
  BasisIndex index;
  double eigenvalue = 0.0;
  double max_relative_deviation = 0.0;
  int probes_used = 0;
  int probes_skipped = 0;
};

/// Finite-difference application of the spectral differential operator to one
/// basis element at interior probe points.
SpectralReport spectral_check(const Domain& dom, const Weight& w, const BasisIndex& idx, int probes,
                              double h = 1e-4);

}  // namespace cf
