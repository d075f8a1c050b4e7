#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cf/error.hpp"
#include "cf/kernels.hpp"
#include "cf/parallel.hpp"
#include "cf/quadrature.hpp"

namespace cf {

namespace {

constexpr std::size_t kBlock = 512;

// Orthonormal even-degree basis values at upper-sheet nodes, scaled by 2 so that
// symmetric weights on the upper half carry the full moment.
class MomentColumns {
 public:
  MomentColumns(const BasisSet& basis, const SeparatedSet& nodes) : basis_(basis), nodes_(nodes) {
    for (int n = 0; n <= basis.max_degree(); n += 2) {
      for (std::size_t i = basis.begin(n); i < basis.begin(n + 1); ++i) rows_.push_back(i);
    }
  }
  Eigen::Index rows() const { return static_cast<Eigen::Index>(rows_.size()); }

  // Columns for upper nodes [b, e).
  Eigen::MatrixXd block(std::size_t b, std::size_t e) const {
    Eigen::MatrixXd a(rows(), static_cast<Eigen::Index>(e - b));
    parallel_for(e - b, [&](std::size_t lo, std::size_t hi) {
      std::vector<double> v(basis_.size());
      for (std::size_t c = lo; c < hi; ++c) {
        basis_.eval(nodes_.nodes[b + c].p, v);
        for (Eigen::Index r = 0; r < rows(); ++r) a(r, static_cast<Eigen::Index>(c)) = 2.0 * v[rows_[static_cast<std::size_t>(r)]];
      }
    });
    return a;
  }

 private:
  const BasisSet& basis_;
  const SeparatedSet& nodes_;
  std::vector<std::size_t> rows_;
};

}  // namespace

double cubature_separation(int n, double delta) {
  if (!(delta > 0.0)) throw ParameterError("delta must be positive");
  if (n <= 0) return std::numbers::pi / 4.0;
  return std::min(std::numbers::pi / 4.0, delta / n);
}

CubatureRule cubature_solve(const Domain& dom, const Weight& w, int n, const SeparatedSet& nodes, double tol) {
  validate(dom, w);
  if (n < 0) throw ParameterError("negative cubature degree");
  if (!(tol > 0.0)) throw ParameterError("cubature tolerance must be positive");
  if (nodes.dom.kind != dom.kind || nodes.dom.d != dom.d || nodes.dom.rho != dom.rho) {
    throw ParameterError("node set domain does not match");
  }
  if (!nodes.evenly_symmetric) throw SymmetryError("cubature needs an evenly symmetric node set");
  const std::size_t upper = nodes.size() / 2;

  const BasisSet basis(dom, w, n);
  const MomentColumns cols(basis, nodes);
  const Eigen::Index m = cols.rows();
  if (static_cast<Eigen::Index>(upper) < m) {
    throw InfeasibleError("fewer node orbits (" + std::to_string(upper) + ") than moments (" + std::to_string(m) + ")",
                          1.0);
  }

  // Prior: cell measures. Correction: the minimizer of sum (l - l0)^2 / l0
  // subject to exact moments, l = l0 (1 + A^T c) with (A D A^T) c = e0 - A l0.
  Eigen::VectorXd prior(static_cast<Eigen::Index>(upper));
  for (std::size_t i = 0; i < upper; ++i) prior(static_cast<Eigen::Index>(i)) = cell_measure(nodes, w, i);

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd moments = Eigen::VectorXd::Zero(m);
  for (std::size_t b = 0; b < upper; b += kBlock) {
    const std::size_t e = std::min(upper, b + kBlock);
    const Eigen::MatrixXd a = cols.block(b, e);
    const auto pb = prior.segment(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(e - b));
    gram.noalias() += a * pb.asDiagonal() * a.transpose();
    moments.noalias() += a * pb;
  }
  const Eigen::LLT<Eigen::MatrixXd> chol(gram);
  if (chol.info() != Eigen::Success) throw InfeasibleError("moment Gram matrix is singular", 1.0);

  Eigen::VectorXd target = Eigen::VectorXd::Zero(m);
  target(0) = 1.0;
  Eigen::VectorXd lambda = prior;
  Eigen::VectorXd defect = target - moments;
  // Two refinement sweeps remove the round-off left by the first solve.
  for (int sweep = 0; sweep < 3; ++sweep) {
    const Eigen::VectorXd c = chol.solve(defect);
    Eigen::VectorXd next = Eigen::VectorXd::Zero(m);
    for (std::size_t b = 0; b < upper; b += kBlock) {
      const std::size_t e = std::min(upper, b + kBlock);
      const auto len = static_cast<Eigen::Index>(e - b);
      const Eigen::MatrixXd a = cols.block(b, e);
      auto seg = lambda.segment(static_cast<Eigen::Index>(b), len);
      seg.array() += prior.segment(static_cast<Eigen::Index>(b), len).array() * (a.transpose() * c).array();
      next.noalias() += a * seg;
    }
    defect = target - next;
  }

  CubatureRule rule;
  rule.dom = dom;
  rule.w = w;
  rule.degree = n;
  rule.delta = n > 0 ? nodes.epsilon * n : nodes.epsilon;
  rule.residual = defect.norm();
  rule.nodes = nodes;
  rule.lambda.resize(nodes.size());
  for (std::size_t i = 0; i < upper; ++i) {
    rule.lambda[i] = lambda(static_cast<Eigen::Index>(i));
    rule.lambda[i + upper] = lambda(static_cast<Eigen::Index>(i));
  }
  const double lmin = lambda.minCoeff();
  if (!(rule.residual <= tol)) {
    throw InfeasibleError("moment residual " + std::to_string(rule.residual) + " above tolerance", rule.residual);
  }
  if (!(lmin > 0.0)) {
    throw InfeasibleError("cubature weight not positive (min " + std::to_string(lmin) + ")", rule.residual);
  }
  return rule;
}

CubatureRule cubature_build(const Domain& dom, const Weight& w, int n, double delta, double tol, int retries) {
  double best = 1.0;
  std::string last;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const double eps = cubature_separation(n, delta);
    try {
      CubatureRule rule = cubature_solve(dom, w, n, build_separated(dom, eps), tol);
      rule.delta = delta;
      return rule;
    } catch (const InfeasibleError& e) {
      best = std::min(best, e.best_residual());
      last = e.what();
    }
    delta *= 0.5;
  }
  throw InfeasibleError("no positive cubature of degree " + std::to_string(n) + " after " + std::to_string(retries) +
                            " retries: " + last,
                        best);
}

}  // namespace cf
