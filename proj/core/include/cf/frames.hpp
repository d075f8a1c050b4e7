/// \file frames.hpp
/// \brief Semi-discrete tight frames from dyadic windows and level-matched
/// positive cubature.
#pragma once

#include <vector>

#include "cf/kernels.hpp"
#include "cf/quadrature.hpp"

namespace cf {

/// Window of level j at polynomial degree k; level 0 holds the constants and
/// level j >= 1 is supported on 2^(j-2) < k < 2^j.
double frame_window(int j, int k);

/// Highest degree on which the squared windows of levels 0..J sum to one.
int frame_band_limit(int J);

struct FrameLevel {
  int j = 0;
  CubatureRule rule;  // exact on even polynomials of degree 2^(j+1)

  friend bool operator==(const FrameLevel&, const FrameLevel&) = default;
};

struct Frame {
  Domain dom;
  Weight w;
  int J = 0;
  double delta = 1.0;
  std::vector<FrameLevel> levels;

  std::size_t size() const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Level j uses nodes at separation delta / 2^(j+1). Cubature failures are
/// rethrown as InfeasibleError naming the level.
Frame build_frame(const Domain& dom, const Weight& w, int J, double delta, double tol = 1e-10);

/// Frame coefficients, level-major in node order.
struct FrameCoefficients {
  std::vector<std::vector<double>> levels;

  double energy() const;
};

/// Coefficients of f given by its orthonormal-basis coefficients up to
/// frame_band_limit(J); degrees beyond are ignored.
FrameCoefficients frame_analyze(const Frame& fr, std::span<const double> basis_coeff);

/// Same, with the basis coefficients obtained by reference quadrature. Throws
/// SymmetryError when f is not even in t.
FrameCoefficients frame_analyze(const Frame& fr, const PointFunction& f);

/// Orthonormal-basis coefficients (degrees <= frame_band_limit(J)) of
/// sum coeff * psi.
std::vector<double> frame_synthesize(const Frame& fr, const FrameCoefficients& coeff);

/// psi_{node, j}(p) = sqrt(lambda) K_j(p, node).
double frame_element(const Frame& fr, int j, std::size_t node, const Point& p);

/// Throws SymmetryError unless f(x, t) = f(x, -t) at sampled points.
void require_even(const Domain& dom, const PointFunction& f, double tol = 1e-10);

}  // namespace cf
