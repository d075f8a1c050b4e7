/// \file geometry.hpp
/// \brief Double conic surfaces and solids, their intrinsic distance, weights,
/// metric-ball measures and explicit separated node sets.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cf {

enum class DomainKind { Surface, Solid };

/// Surface: ||x||^2 = t^2 - rho^2. Solid: ||x||^2 <= t^2 - rho^2. In both
/// cases rho <= |t| <= sqrt(1 + rho^2); rho = 0 is the double cone.
struct Domain {
  DomainKind kind = DomainKind::Surface;
  int d = 2;
  double rho = 0.0;

  friend bool operator==(const Domain&, const Domain&) = default;
};

void validate(const Domain& dom);

/// Weight exponents. Surface: |t| (t^2-rho^2)^(beta-1/2) (1+rho^2-t^2)^(gamma-1/2).
/// Solid multiplies by (t^2-rho^2-||x||^2)^(mu-1/2).
struct Weight {
  double beta = 0.0;
  double gamma = 0.5;
  double mu = 0.5;

  friend bool operator==(const Weight&, const Weight&) = default;
};

void validate(const Domain& dom, const Weight& w);

inline constexpr int kMaxDim = 6;

/// A point (x, t) with x in R^dim, stored inline.
struct Point {
  std::array<double, kMaxDim> x{};
  int dim = 0;
  double t = 0.0;

  Point() = default;
  Point(std::span<const double> xs, double tv);
  Point(std::initializer_list<double> xs, double tv);

  std::span<const double> coords() const { return {x.data(), static_cast<std::size_t>(dim)}; }
  double norm2() const;
  Point mirrored() const;  // (-x, -t)

  friend bool operator==(const Point&, const Point&) = default;
};

double dot(const Point& p, const Point& q);

bool on_domain(const Domain& dom, const Point& p, double tol = 1e-12);
void require_on_domain(const Domain& dom, const Point& p, double tol = 1e-12);

/// Intrinsic distance in [0, pi]. Throws CrossSheetError for rho > 0 when
/// p and q lie on different sheets.
double distance(const Domain& dom, const Point& p, const Point& q);

/// Distance-preserving map between the rho-parameters:
/// (x, t) -> (x, sign(t) sqrt(t^2 - from^2 + to^2)).
Point rho_lift(const Point& p, double from_rho, double to_rho);

/// Unnormalized weight at p; +infinity exactly on a singular boundary.
double weight_eval(const Domain& dom, const Weight& w, const Point& p);

/// Ball-comparison function w(n; .) with w(n; p) n^{-dim} comparable to the
/// measure of the ball of radius 1/n at p (dim = d on the surface, d+1 for the solid).
double wn_eval(const Domain& dom, const Weight& w, double n, const Point& p);

/// Closed-form comparison quantity for the measure of the ball c(p, r) (rho = 0 form,
/// applied after lifting p to the cone).
double ball_comparison(const Domain& dom, const Weight& w, const Point& p, double r);

/// Normalized weight measure of the same-sheet ball c(p, r); d = 2 only.
double ball_measure(const Domain& dom, const Weight& w, const Point& p, double r);

struct Band {
  double t = 0.0;       // centre t_j
  double tminus = 0.0;  // cos(theta_j + pi/(2N))
  double tplus = 0.0;   // cos(theta_j - pi/(2N))
  double epsj = 0.0;    // separation used inside the band

  friend bool operator==(const Band&, const Band&) = default;
};

/// Product cell attached to a node, in rho = 0 coordinates. The radial range
/// [tlo, thi] is in |t|; the angular sector is [alo, ahi); for the solid the
/// ring [rlo, rhi] is an interval of arcsin of the relative radius ||x||/|t|.
struct Cell {
  double tlo = 0.0, thi = 0.0;
  double alo = 0.0, ahi = 0.0;
  double rlo = 0.0, rhi = 0.0;
  int sheet = 1;  // +1 upper, -1 lower

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Node {
  Point p;
  int band = 0;  // 1-based band index, 1..N
  int cell = 0;  // index of the cell within its band
  Cell geometry;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Nodes are stored upper sheet first; node i + size()/2 is the mirror of node i.
struct SeparatedSet {
  Domain dom;
  double epsilon = 0.0;
  int N = 0;
  std::vector<Band> bands;
  std::vector<Node> nodes;
  bool evenly_symmetric = false;

  std::size_t size() const { return nodes.size(); }

  friend bool operator==(const SeparatedSet&, const SeparatedSet&) = default;
};

SeparatedSet build_separated(const Domain& dom, double eps);

/// True when the node set is invariant under (x, t) -> (-x, -t).
bool check_even_symmetry(const SeparatedSet& s, double tol = 1e-10);

struct SeparationReport {
  double min_distance = 0.0;
  int min_multiplicity = 0;
  int max_multiplicity = 0;
  std::vector<int> histogram;  // histogram[k] = number of probes covered k times
  bool evenly_symmetric = false;
  int probes = 0;
};

/// Minimum same-sheet pairwise distance, covering multiplicity of the
/// epsilon-balls over quasi-random probes, and the symmetry flag.
SeparationReport verify_separated(const SeparatedSet& s, int probes);

/// Normalized weight measure of a node's cell.
double cell_measure(const SeparatedSet& s, const Weight& w, std::size_t node);

/// Maps (u1, u2, u3) in [0,1)^3 to a point in a node's cell (u3 ignored on the surface).
Point cell_point(const SeparatedSet& s, std::size_t node, double u1, double u2, double u3);

/// Maps (u1, u2, u3, u4) in [0,1)^4 to a point of the domain; used for probes.
Point domain_point(const Domain& dom, double u1, double u2, double u3, double u4);

/// i-th point of the Halton sequence in the given prime base.
double halton(std::uint64_t i, int base);

}  // namespace cf
