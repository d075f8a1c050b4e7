#include "cf/frames.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "cf/error.hpp"
#include "cf/parallel.hpp"

namespace cf {

double frame_window(int j, int k) { return window_eval(j, 2.0 * k); }

int frame_band_limit(int J) { return J <= 0 ? 0 : 1 << (J - 1); }

std::size_t Frame::size() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.rule.size();
  return n;
}

double FrameCoefficients::energy() const {
  double e = 0.0;
  for (const auto& l : levels) {
    for (double c : l) e += c * c;
  }
  return e;
}

Frame build_frame(const Domain& dom, const Weight& w, int J, double delta, double tol) {
  if (J < 0 || J > 6) throw ParameterError("frame level count must lie in [0, 6]");
  Frame fr;
  fr.dom = dom;
  fr.w = w;
  fr.J = J;
  fr.delta = delta;
  for (int j = 0; j <= J; ++j) {
    const int degree = 1 << (j + 1);
    try {
      fr.levels.push_back({j, cubature_build(dom, w, degree, delta, tol, 3)});
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("frame level " + std::to_string(j) + ": " + e.what(), e.best_residual());
    }
  }
  return fr;
}

namespace {

// Basis values of degree <= limit at every node of a level, as one callback per node.
template <class F>
void for_each_node(const BasisSet& basis, const FrameLevel& lvl, F&& f) {
  const auto& nodes = lvl.rule.nodes.nodes;
  parallel_for(nodes.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<double> v(basis.size());
    for (std::size_t i = lo; i < hi; ++i) {
      basis.eval(nodes[i].p, v);
      f(i, v);
    }
  });
}

}  // namespace

FrameCoefficients frame_analyze(const Frame& fr, std::span<const double> basis_coeff) {
  const int limit = frame_band_limit(fr.J);
  const BasisSet basis(fr.dom, fr.w, limit);
  FrameCoefficients out;
  for (const auto& lvl : fr.levels) {
    std::vector<double> filtered(basis.size(), 0.0);
    for (std::size_t i = 0; i < basis.size() && i < basis_coeff.size(); ++i) {
      filtered[i] = frame_window(lvl.j, basis.indices()[i].n) * basis_coeff[i];
    }
    std::vector<double> c(lvl.rule.size());
    for_each_node(basis, lvl, [&](std::size_t i, const std::vector<double>& v) {
      double g = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) g += filtered[k] * v[k];
      c[i] = std::sqrt(lvl.rule.lambda[i]) * g;
    });
    out.levels.push_back(std::move(c));
  }
  return out;
}

void require_even(const Domain& dom, const PointFunction& f, double tol) {
  for (std::uint64_t i = 1; i <= 64; ++i) {
    const Point p = domain_point(dom, halton(i, 2), halton(i, 3), halton(i, 5), 0.25);
    Point q = p;
    q.t = -p.t;
    const double a = f(p), b = f(q);
    if (std::abs(a - b) > tol * std::max(1.0, std::abs(a))) {
      throw SymmetryError("function is not even in t at t = " + std::to_string(p.t));
    }
  }
}

FrameCoefficients frame_analyze(const Frame& fr, const PointFunction& f) {
  require_even(fr.dom, f);
  const int limit = frame_band_limit(fr.J);
  const BasisSet basis(fr.dom, fr.w, limit);
  const ReferenceRule rule = reference_rule(fr.dom, fr.w, 2 * limit + 8);
  std::vector<double> coeff(basis.size(), 0.0);
  std::vector<double> v(basis.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double fv = f(rule.points[i]);
    if (!std::isfinite(fv)) throw IntegrationError("integrand not finite at reference node " + std::to_string(i));
    basis.eval(rule.points[i], v);
    for (std::size_t k = 0; k < v.size(); ++k) coeff[k] += rule.weights[i] * fv * v[k];
  }
  return frame_analyze(fr, coeff);
}

std::vector<double> frame_synthesize(const Frame& fr, const FrameCoefficients& coeff) {
  if (coeff.levels.size() != fr.levels.size()) throw ParameterError("coefficient levels do not match frame");
  const int limit = frame_band_limit(fr.J);
  const BasisSet basis(fr.dom, fr.w, limit);
  std::vector<double> out(basis.size(), 0.0);
  for (std::size_t l = 0; l < fr.levels.size(); ++l) {
    const auto& lvl = fr.levels[l];
    if (coeff.levels[l].size() != lvl.rule.size()) throw ParameterError("coefficient count does not match level");
    // sum over nodes of c sqrt(lambda) Phi(node), accumulated per chunk then reduced in order
    std::vector<double> acc(basis.size(), 0.0);
    const auto& nodes = lvl.rule.nodes.nodes;
    std::vector<double> v(basis.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double c = coeff.levels[l][i] * std::sqrt(lvl.rule.lambda[i]);
      if (c == 0.0) continue;
      basis.eval(nodes[i].p, v);
      for (std::size_t k = 0; k < v.size(); ++k) acc[k] += c * v[k];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += frame_window(lvl.j, basis.indices()[k].n) * acc[k];
  }
  return out;
}

double frame_element(const Frame& fr, int j, std::size_t node, const Point& p) {
  if (j < 0 || j > fr.J) throw ParameterError("frame level out of range");
  const auto& lvl = fr.levels[static_cast<std::size_t>(j)];
  const int top = j == 0 ? 0 : (1 << j) - 1;
  std::vector<double> g(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) g[static_cast<std::size_t>(k)] = frame_window(j, k);
  const KernelContext ctx = make_kernel_context(fr.dom, fr.w, top);
  return std::sqrt(lvl.rule.lambda.at(node)) * series_kernel(ctx, g, p, lvl.rule.nodes.nodes.at(node).p);
}

}  // namespace cf
