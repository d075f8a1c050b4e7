#include "cf/orthopoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "cf/error.hpp"

namespace cf {

void validate(JacobiParams p) {
  if (!(p.alpha > -1.0) || !(p.beta > -1.0)) {
    throw ParameterError("Jacobi exponents must exceed -1 (alpha=" + std::to_string(p.alpha) +
                         ", beta=" + std::to_string(p.beta) + ")");
  }
}

void jacobi_all(int n, JacobiParams p, double x, std::span<double> out) {
  validate(p);
  if (n < 0) throw ParameterError("negative degree");
  if (out.size() < static_cast<std::size_t>(n) + 1) throw ParameterError("output span too short");
  const double a = p.alpha, b = p.beta;
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double ab2 = a * a - b * b;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * (k + 1) * (k + a + b + 1.0) * c;
    const double a2 = (c + 1.0) * ab2;
    const double a3 = c * (c + 1.0) * (c + 2.0);
    const double a4 = 2.0 * (k + a) * (k + b) * (c + 2.0);
    out[k + 1] = ((a2 + a3 * x) * out[k] - a4 * out[k - 1]) / a1;
  }
}

std::vector<double> jacobi_all(int n, JacobiParams p, double x) {
  std::vector<double> v(static_cast<std::size_t>(std::max(n, 0)) + 1);
  jacobi_all(n, p, x, v);
  return v;
}

double jacobi_eval(int n, JacobiParams p, double x) {
  validate(p);
  if (n < 0) throw ParameterError("negative degree");
  const double a = p.alpha, b = p.beta;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double ab2 = a * a - b * b;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + a + b;
    const double next = (((c + 1.0) * ab2 + c * (c + 1.0) * (c + 2.0) * x) * cur -
                         2.0 * (k + a) * (k + b) * (c + 2.0) * prev) /
                        (2.0 * (k + 1) * (k + a + b + 1.0) * c);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_at_one(int n, JacobiParams p) {
  validate(p);
  // (alpha+1)_n / n!
  return std::exp(std::lgamma(p.alpha + 1.0 + n) - std::lgamma(p.alpha + 1.0) - std::lgamma(n + 1.0));
}

double jacobi_norm(int n, JacobiParams p) {
  validate(p);
  if (n < 0) throw ParameterError("negative degree");
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  const double lg = std::lgamma(a + 1.0 + n) - std::lgamma(a + 1.0) + std::lgamma(b + 1.0 + n) -
                    std::lgamma(b + 1.0) - std::lgamma(n + 1.0) - std::lgamma(a + b + 2.0 + n) +
                    std::lgamma(a + b + 2.0) + std::log(a + b + n + 1.0) - std::log(a + b + 2.0 * n + 1.0);
  return std::exp(lg);
}

double log_jacobi_constant(JacobiParams p) {
  validate(p);
  const double a = p.alpha, b = p.beta;
  return std::lgamma(a + b + 2.0) - (a + b + 1.0) * std::log(2.0) - std::lgamma(a + 1.0) -
         std::lgamma(b + 1.0);
}

double jacobi_constant(JacobiParams p) { return std::exp(log_jacobi_constant(p)); }

void gegenbauer_Z_all(int n, double lambda, double x, std::span<double> out) {
  if (!(lambda > 0.0)) throw ParameterError("Gegenbauer index must be positive");
  if (n < 0) throw ParameterError("negative degree");
  if (out.size() < static_cast<std::size_t>(n) + 1) throw ParameterError("output span too short");
  double prev = 1.0;
  out[0] = 1.0;
  if (n == 0) return;
  double cur = 2.0 * lambda * x;
  out[1] = (1.0 + lambda) / lambda * cur;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    out[k + 1] = (k + 1.0 + lambda) / lambda * cur;
  }
}

double gegenbauer_Z(int n, double lambda, double x) {
  std::vector<double> v(static_cast<std::size_t>(std::max(n, 0)) + 1);
  gegenbauer_Z_all(n, lambda, x, v);
  return v[static_cast<std::size_t>(n)];
}

QuadRule1D gauss_jacobi(int m, JacobiParams p) {
  validate(p);
  if (m < 1) throw ParameterError("Gauss-Jacobi rule needs at least one node");
  const double a = p.alpha, b = p.beta;

  Eigen::VectorXd diag(m);
  Eigen::VectorXd off(std::max(m - 1, 1));
  diag(0) = (b - a) / (a + b + 2.0);
  for (int k = 1; k < m; ++k) {
    const double c = 2.0 * k + a + b;
    diag(k) = (b * b - a * a) / (c * (c + 2.0));
  }
  for (int k = 1; k < m; ++k) {
    const double c = 2.0 * k + a + b;
    double v;
    if (k == 1) {
      v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      v = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (c * c * (c + 1.0) * (c - 1.0));
    }
    off(k - 1) = std::sqrt(v);
  }

  QuadRule1D rule;
  rule.params = p;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  if (m == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = 1.0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off.head(m - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("tridiagonal eigen-solver did not converge for m=" + std::to_string(m));
  }
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  for (int i = 0; i < m; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = vals(i);
    rule.weights[static_cast<std::size_t>(i)] = vecs(0, i) * vecs(0, i);
  }
  if (a == b) {
    // enforce exact mirror symmetry
    for (int i = 0; i < m / 2; ++i) {
      const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(m - 1 - i);
      const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
      const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
      rule.nodes[lo] = -x;
      rule.nodes[hi] = x;
      rule.weights[lo] = rule.weights[hi] = w;
    }
    if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  }
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

double kernel1d(int n, JacobiParams p, const Cutoff& c, double t) {
  if (n < 1) throw ParameterError("kernel1d needs n >= 1");
  const int top = 2 * n;
  std::vector<double> pt(static_cast<std::size_t>(top) + 1);
  jacobi_all(top, p, t, pt);
  double sum = 0.0;
  for (int k = 0; k <= top; ++k) {
    const double a = cutoff_eval(c, static_cast<double>(k) / n);
    if (a == 0.0) continue;
    sum += a * pt[static_cast<std::size_t>(k)] * jacobi_at_one(k, p) / jacobi_norm(k, p);
  }
  return sum;
}

}  // namespace cf
