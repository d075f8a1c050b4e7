/// \file orthopoly.hpp
/// \brief Jacobi and Gegenbauer polynomials, Gauss-Jacobi rules, smooth
/// cut-off functions and the one-variable localized kernel.
#pragma once

#include <span>
#include <vector>

namespace cf {

/// Exponents of the Jacobi weight (1-x)^alpha (1+x)^beta on [-1,1].
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Throws ParameterError unless alpha > -1 and beta > -1.
void validate(JacobiParams p);

/// P_n^{(alpha,beta)}(x) by the three-term recurrence.
double jacobi_eval(int n, JacobiParams p, double x);

/// Writes P_0(x), ..., P_n(x) into out[0..n]; out must hold n+1 values.
void jacobi_all(int n, JacobiParams p, double x, std::span<double> out);
std::vector<double> jacobi_all(int n, JacobiParams p, double x);

/// P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!.
double jacobi_at_one(int n, JacobiParams p);

/// Squared norm of P_n under the normalized weight c'_{alpha,beta} w_{alpha,beta}.
double jacobi_norm(int n, JacobiParams p);

/// Normalization constant c'_{alpha,beta} making the weight a probability
/// measure on [-1,1].
double jacobi_constant(JacobiParams p);
double log_jacobi_constant(JacobiParams p);

/// Z_n^lambda(x) = (n+lambda)/lambda * C_n^lambda(x), lambda > 0.
double gegenbauer_Z(int n, double lambda, double x);

/// Writes Z_0(x), ..., Z_n(x) into out[0..n].
void gegenbauer_Z_all(int n, double lambda, double x, std::span<double> out);

/// Gauss rule for the normalized Jacobi measure: exact to degree 2m-1,
/// nodes increasing in (-1,1), weights positive and summing to one.
struct QuadRule1D {
  JacobiParams params;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

QuadRule1D gauss_jacobi(int m, JacobiParams p);

enum class CutoffKind { TypeA, TypeB, FrameWindow };

/// Smooth cut-off. TypeA equals 1 on [0,1] and vanishes beyond 2; TypeB is
/// supported in [1/2,2] with a(t)^2 + a(2t)^2 = 1 on [1/2,1]. FrameWindow
/// selects the dyadic window family evaluated through window_eval.
struct Cutoff {
  CutoffKind kind = CutoffKind::TypeA;
  /// Derivative count used when quoting decay targets (the step is C-infinity).
  int smoothness = 8;
};

/// The C-infinity step: 0 for s <= 0, 1 for s >= 1, and step(s) + step(1-s) = 1.
double smooth_step(double s);

double cutoff_eval(const Cutoff& c, double t);

/// Dyadic window g_j with g_0^2 = b(t) and g_j^2 = b(t/2^j) - b(t/2^{j-1}),
/// b the TypeA cut-off, so sum_{j<=J} g_j(t)^2 = b(t/2^J).
double window_eval(int j, double t);

/// L_n(t) = sum_{k<=2n} a(k/n) P_k(t) P_k(1) / h_k.
double kernel1d(int n, JacobiParams p, const Cutoff& c, double t);

}  // namespace cf
