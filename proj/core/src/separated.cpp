#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "cf/error.hpp"
#include "cf/geometry.hpp"
#include "cf/orthopoly.hpp"

namespace cf {

namespace {

constexpr double kPi = std::numbers::pi;

struct SheetIndex {
  std::vector<double> theta;       // sorted polar angle arccos|t| (rho = 0 coordinates)
  std::vector<std::size_t> order;  // node indices in the same order
};

double polar_angle(const Domain& dom, const Point& p) {
  const double s = std::sqrt(std::max(0.0, p.t * p.t - dom.rho * dom.rho));
  return std::acos(std::min(1.0, s));
}

SheetIndex index_sheet(const SeparatedSet& s, int sheet) {
  std::vector<std::pair<double, std::size_t>> v;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if ((s.nodes[i].p.t >= 0.0 ? 1 : -1) == sheet) v.emplace_back(polar_angle(s.dom, s.nodes[i].p), i);
  }
  std::sort(v.begin(), v.end());
  SheetIndex idx;
  for (auto& [th, i] : v) {
    idx.theta.push_back(th);
    idx.order.push_back(i);
  }
  return idx;
}

void add_node(SeparatedSet& s, int band, int cell, double tj, const Cell& geom, double xr, double phi) {
  Node node;
  std::array<double, kMaxDim> xs{};
  xs[0] = std::abs(tj) * xr * std::cos(phi);
  xs[1] = std::abs(tj) * xr * std::sin(phi);
  node.p = Point(std::span<const double>(xs.data(), static_cast<std::size_t>(s.dom.d)), tj);
  node.band = band;
  node.cell = cell;
  node.geometry = geom;
  s.nodes.push_back(node);
}

}  // namespace

SeparatedSet build_separated(const Domain& dom, double eps) {
  validate(dom);
  if (dom.d != 2) throw ParameterError("separated sets are implemented for d = 2");
  if (!(eps > 0.0) || eps > kPi / 4.0 + 1e-12) throw ParameterError("eps must lie in (0, pi/4]");
  SeparatedSet s;
  s.dom = dom;
  s.epsilon = eps;
  s.N = 2 * static_cast<int>(std::floor(kPi / (2.0 * eps) + 1e-9));
  if (s.N < 2) throw ParameterError("eps too large: fewer than two bands");
  const int N = s.N;
  const double half = kPi / (2.0 * N);
  for (int j = 1; j <= N; ++j) {
    const double th = (2.0 * j - 1.0) * half;
    Band b;
    b.t = std::cos(th);
    b.tminus = std::cos(std::min(kPi, th + half));
    b.tplus = std::cos(std::max(0.0, th - half));
    if (dom.kind == DomainKind::Surface) {
      b.epsj = kPi * eps / (2.0 * std::abs(b.t));
    } else {
      // 1 - cos d = t^2 (1 - cos d_B) within a band
      b.epsj = std::acos(std::max(-1.0, 1.0 - (1.0 - std::cos(eps)) / (b.t * b.t))) * (1.0 + 1e-9);
    }
    s.bands.push_back(b);
  }

  // Upper sheet in rho = 0 coordinates; the lower sheet is the mirror image.
  for (int j = 1; j <= N / 2; ++j) {
    const Band& b = s.bands[static_cast<std::size_t>(j - 1)];
    int cell = 0;
    const auto ring = [&](double rlo, double rhi, int count, double xr) {
      const double step = 2.0 * kPi / count;
      for (int k = 0; k < count; ++k) {
        Cell g;
        g.tlo = std::max(0.0, b.tminus);
        g.thi = b.tplus;
        g.alo = (k - 0.5) * step;
        g.ahi = (k + 0.5) * step;
        g.rlo = rlo;
        g.rhi = rhi;
        g.sheet = 1;
        add_node(s, j, cell++, b.t, g, xr, k * step);
      }
    };
    if (dom.kind == DomainKind::Surface) {
      // Capped where the ceiling would put ring neighbours closer than eps.
      int count = static_cast<int>(std::ceil(2.0 * kPi / b.epsj - 1e-9));
      const double c = 1.0 - (1.0 - std::cos(eps)) / (b.t * b.t);
      count = c > -1.0 ? std::min(count, static_cast<int>(std::floor(2.0 * kPi / std::acos(c) * (1.0 - 1e-12)))) : 1;
      ring(0.0, kPi / 2.0, std::max(1, count), 1.0);
    } else {
      // Rings on the hemisphere model of the disk, spaced by at least the smallest
      // ball distance eta that keeps same-band points eps apart.
      const double eta = b.epsj;
      const int rings = static_cast<int>(std::floor(kPi / 2.0 / eta + 1e-9));
      const double gap = rings > 0 ? kPi / 2.0 / rings : kPi / 2.0;  // outermost ring on the rim
      for (int i = 0; i <= rings; ++i) {
        const double phi = i * gap;
        const double rlo = std::max(0.0, phi - 0.5 * gap);
        const double rhi = i == rings ? kPi / 2.0 : std::min(kPi / 2.0, phi + 0.5 * gap);
        int count = 1;
        const double s2 = std::sin(phi) * std::sin(phi);
        if (s2 > 0.0) {
          const double c = (std::cos(eta) - (1.0 - s2)) / s2;
          if (c > -1.0) count = std::max(1, static_cast<int>(std::floor(2.0 * kPi / std::acos(c) * (1.0 - 1e-12))));
        }
        ring(rlo, rhi, count, std::sin(phi));
      }
    }
  }
  const std::size_t upper = s.nodes.size();
  for (std::size_t i = 0; i < upper; ++i) {
    Node m = s.nodes[i];
    m.p = m.p.mirrored();
    m.band = N + 1 - m.band;
    m.geometry.sheet = -1;
    m.geometry.alo += kPi;
    m.geometry.ahi += kPi;
    s.nodes.push_back(m);
  }
  if (dom.rho > 0.0) {
    for (auto& n : s.nodes) n.p = rho_lift(n.p, 0.0, dom.rho);
  }
  s.evenly_symmetric = check_even_symmetry(s);
  return s;
}

bool check_even_symmetry(const SeparatedSet& s, double tol) {
  using Key = std::tuple<long long, long long, long long>;
  const auto key = [tol](const Point& p) {
    const auto q = [tol](double v) { return std::llround(v / tol); };
    return Key{q(p.x[0]), q(p.x[1]), q(p.t)};
  };
  std::map<Key, int> count;
  for (const auto& n : s.nodes) ++count[key(n.p)];
  for (const auto& n : s.nodes) {
    const auto it = count.find(key(n.p.mirrored()));
    if (it == count.end() || it->second != count[key(n.p)]) return false;
  }
  return true;
}

SeparationReport verify_separated(const SeparatedSet& s, int probes) {
  SeparationReport rep;
  rep.probes = probes;
  rep.evenly_symmetric = check_even_symmetry(s);
  double best = kPi;
  for (int sheet : {1, -1}) {
    const SheetIndex idx = index_sheet(s, sheet);
    const std::size_t m = idx.order.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m && idx.theta[b] - idx.theta[a] <= best; ++b) {
        const double dd = distance(s.dom, s.nodes[idx.order[a]].p, s.nodes[idx.order[b]].p);
        best = std::min(best, dd);
      }
    }
  }
  rep.min_distance = best;

  const SheetIndex up = index_sheet(s, 1), down = index_sheet(s, -1);
  rep.min_multiplicity = std::numeric_limits<int>::max();
  rep.max_multiplicity = 0;
  for (int i = 0; i < probes; ++i) {
    const auto k = static_cast<std::uint64_t>(i) + 1;
    const Point p = domain_point(s.dom, halton(k, 2), halton(k, 3), halton(k, 5), halton(k, 7));
    const SheetIndex& idx = p.t >= 0.0 ? up : down;
    const double th = polar_angle(s.dom, p);
    auto lo = std::lower_bound(idx.theta.begin(), idx.theta.end(), th - s.epsilon - 1e-12);
    int count = 0;
    for (auto it = lo; it != idx.theta.end() && *it <= th + s.epsilon + 1e-12; ++it) {
      const auto node = idx.order[static_cast<std::size_t>(it - idx.theta.begin())];
      if (distance(s.dom, p, s.nodes[node].p) <= s.epsilon + 1e-12) ++count;
    }
    if (static_cast<std::size_t>(count) >= rep.histogram.size()) rep.histogram.resize(static_cast<std::size_t>(count) + 1, 0);
    ++rep.histogram[static_cast<std::size_t>(count)];
    rep.min_multiplicity = std::min(rep.min_multiplicity, count);
    rep.max_multiplicity = std::max(rep.max_multiplicity, count);
  }
  if (probes == 0) rep.min_multiplicity = 0;
  return rep;
}

namespace {

// Integral over the polar angle theta in [a, b] of cos^p(theta) sin^q(theta).
double polar_mass(double a, double b, double p, double q) {
  static const QuadRule1D gl = gauss_jacobi(32, {0.0, 0.0});
  if (b <= a) return 0.0;
  double s = 0.0;
  for (int i = 0; i < gl.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double th = 0.5 * (a + b) + 0.5 * (b - a) * gl.nodes[k];
    s += gl.weights[k] * std::pow(std::cos(th), p) * std::pow(std::sin(th), q);
  }
  return s * (b - a);  // weights sum to one on [-1,1] of length 2, half-length (b-a)/2
}

}  // namespace

double cell_measure(const SeparatedSet& s, const Weight& w, std::size_t node) {
  const Cell& g = s.nodes.at(node).geometry;
  const int d = s.dom.d;
  const double th_lo = std::acos(std::min(1.0, g.thi));
  const double th_hi = std::acos(std::min(1.0, g.tlo));
  double radial_p = 2.0 * w.beta + d - 1.0;
  if (s.dom.kind == DomainKind::Solid) radial_p += 2.0 * w.mu;
  const double q = 2.0 * w.gamma;
  const double a = (radial_p + 1.0) / 2.0, b = q / 2.0 + 0.5;
  const double total = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));  // both sheets
  double v = polar_mass(th_lo, th_hi, radial_p, q) / total;
  v *= (g.ahi - g.alo) / (2.0 * kPi);
  if (s.dom.kind == DomainKind::Solid) {
    const double e = 2.0 * w.mu + 1.0;
    v *= std::pow(std::cos(g.rlo), e) - std::pow(std::cos(g.rhi), e);
  }
  return v;
}

Point cell_point(const SeparatedSet& s, std::size_t node, double u1, double u2, double u3) {
  const Cell& g = s.nodes.at(node).geometry;
  const double th_lo = std::acos(std::min(1.0, g.thi));
  const double th_hi = std::acos(std::min(1.0, g.tlo));
  const double th = th_lo + u1 * (th_hi - th_lo);
  const double sv = std::cos(th);
  const double phi = g.alo + u2 * (g.ahi - g.alo);
  double rel = 1.0;
  if (s.dom.kind == DomainKind::Solid) rel = std::sin(g.rlo + u3 * (g.rhi - g.rlo));
  std::array<double, kMaxDim> xs{};
  xs[0] = sv * rel * std::cos(phi);
  xs[1] = sv * rel * std::sin(phi);
  Point p(std::span<const double>(xs.data(), static_cast<std::size_t>(s.dom.d)), g.sheet * sv);
  return rho_lift(p, 0.0, s.dom.rho);
}

}  // namespace cf
