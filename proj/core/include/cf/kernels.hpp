/// \file kernels.hpp
/// \brief Orthogonal bases even in t, reproducing kernels through the addition
/// formula, localized and derivative kernels, Christoffel function, needle
/// polynomials.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cf/geometry.hpp"
#include "cf/orthopoly.hpp"

namespace cf {

/// Index of one element of the even-in-t orthogonal basis at d = 2.
/// Surface element: P_k(2s^2-1) Y_m(x) with m = n - 2k.
/// Solid element: P_k(2s^2-1) S^{2j} P_j(2|x|^2/S^2 - 1) Y_l(x) with m = n - 2k = 2j + l,
/// S^2 = s^2 = t^2 - rho^2. Y is cos (trig = 0) or sin (trig = 1) of the
/// harmonic order, scaled to unit mean square on the circle.
struct BasisIndex {
  int n = 0;
  int k = 0;
  int m = 0;
  int j = 0;
  int l = 0;
  int trig = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// All basis elements of degree <= max_degree, ordered by degree.
class BasisSet {
 public:
  BasisSet(const Domain& dom, const Weight& w, int max_degree);

  const Domain& domain() const { return dom_; }
  const Weight& weight() const { return w_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return index_.size(); }
  const std::vector<BasisIndex>& indices() const { return index_; }
  /// Position of the first element of degree n; begin(max_degree + 1) == size().
  std::size_t begin(int n) const { return offsets_.at(static_cast<std::size_t>(n)); }
  /// Squared norm <C, C> under the normalized weight.
  double norm(std::size_t i) const { return norms_.at(i); }
  /// Values of all elements at p, divided by sqrt(norm) when orthonormal.
  void eval(const Point& p, std::span<double> out, bool orthonormal = true) const;
  std::vector<double> eval(const Point& p, bool orthonormal = true) const;

 private:
  Domain dom_;
  Weight w_;
  int max_degree_;
  std::vector<BasisIndex> index_;
  std::vector<std::size_t> offsets_;
  std::vector<double> norms_;
  std::vector<double> inv_sqrt_norms_;
};

/// Dimension of the even-in-t polynomial space of degree exactly n (d = 2).
std::size_t even_space_dim(DomainKind kind, int n);

double basis_eval(const Domain& dom, const Weight& w, const BasisIndex& idx, const Point& p);
double basis_norm(const Domain& dom, const Weight& w, const BasisIndex& idx);

/// Eigenvalue magnitude mu(k) of the spectral operator on degree-k elements.
double spectral_eigenvalue(const Domain& dom, const Weight& w, int k);

/// Parameters of the addition formula, fixed for degrees up to nmax.
struct KernelContext {
  Domain dom;
  Weight w;
  int nmax = 0;
  double lambda = 0.0;
  QuadRule1D vrule;  // weight (1-v^2)^(gamma-1); unused when v_endpoints
  QuadRule1D urule;  // weight (1-u^2)^(mu-1); solid only
  bool v_endpoints = false;
  bool u_endpoints = false;
};

/// Surface requires beta = 0 and gamma >= 0; solid requires beta = 1/2 and gamma, mu >= 0.
KernelContext make_kernel_context(const Domain& dom, const Weight& w, int nmax);

/// sum_k coeff[k] P_k^E(p, q), evaluated through the addition formula.
double series_kernel(const KernelContext& ctx, std::span<const double> coeff, const Point& p, const Point& q);

/// Fixed coefficient series sum_k coeff[k] P_k^E evaluated through a tabulated
/// one-variable profile; table_points = 0 evaluates the profile exactly.
class KernelSeries {
 public:
  KernelSeries(const KernelContext& ctx, std::vector<double> coeff, int table_points = 0);
  double operator()(const Point& p, const Point& q) const;
  /// sum_k coeff[k] Z_k^lambda(z).
  double profile(double z) const;
  const KernelContext& context() const { return ctx_; }

 private:
  double exact_profile(double z) const;

  KernelContext ctx_;
  std::vector<double> coeff_;
  std::vector<double> table_;
  double step_ = 0.0;
};

double reprod_kernel(const KernelContext& ctx, int n, const Point& p, const Point& q);
double localized_kernel(const KernelContext& ctx, int n, const Cutoff& c, const Point& p, const Point& q);
double derivative_kernel(const KernelContext& ctx, int n, const Cutoff& c, double r, const Point& p,
                         const Point& q);
double christoffel(const KernelContext& ctx, int n, const Point& p);

/// Coefficients a(k/n), k = 0..2n, of the localized kernel.
std::vector<double> localized_coefficients(int n, const Cutoff& c);

/// sum_idx C_idx(p) C_idx(q) / norm over elements of degree n; the basis-side
/// counterpart of reprod_kernel.
double basis_kernel(const BasisSet& basis, int n, const Point& p, const Point& q);

/// Normalizing envelope n^dim / sqrt(w(n;p) w(n;q)) of the localized kernel.
double kernel_envelope(const Domain& dom, const Weight& w, double n, const Point& p, const Point& q);

/// Fast-decaying polynomial peaked at a point: T(centre) = 1, 0 <= T, and
/// T(q) <= c (1 + n d(centre, q))^{-2r}.
class NeedlePolynomial {
 public:
  NeedlePolynomial(const Domain& dom, const Point& centre, int n, int r);
  double operator()(const Point& q) const;
  /// One-variable building block S_n(cos theta).
  double profile(double z) const;

 private:
  double surface_value(std::span<const double> x, double t, std::span<const double> y, double s) const;

  Domain dom_;
  Point centre_;
  int n_;
  int r_;
  int m_;
};

}  // namespace cf
