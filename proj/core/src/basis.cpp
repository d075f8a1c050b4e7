#include <cmath>
#include <complex>
#include <numbers>

#include "cf/error.hpp"
#include "cf/kernels.hpp"

namespace cf {

namespace {

// Squared norm of P_k^{(a, b+m)}(u) ((1+u)/2)^{m/2} under c'_{a,b} w_{a,b}.
double shifted_norm(double a, double b, int m, int k) {
  const double lc = log_jacobi_constant({a, b}) - log_jacobi_constant({a, b + m});
  return std::exp(lc - m * std::log(2.0)) * jacobi_norm(k, {a, b + m});
}

// S^{2j} P_j^{(a,b)}(2 |x|^2 / S^2 - 1) for j = 0..top, evaluated homogeneously so that
// S = 0 is handled without division.
void homogeneous_jacobi(int top, double a, double b, double x2, double S2, std::span<double> out) {
  out[0] = 1.0;
  if (top == 0) return;
  const double X = 2.0 * x2 - S2;  // S^2 * (2w - 1)
  out[1] = (a + 1.0) * S2 + 0.5 * (a + b + 2.0) * (X - S2);
  const double ab2 = a * a - b * b;
  for (int k = 1; k < top; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * (k + 1) * (k + a + b + 1.0) * c;
    const double a2 = (c + 1.0) * ab2;
    const double a3 = c * (c + 1.0) * (c + 2.0);
    const double a4 = 2.0 * (k + a) * (k + b) * (c + 2.0);
    out[static_cast<std::size_t>(k + 1)] =
        ((a2 * S2 + a3 * X) * out[static_cast<std::size_t>(k)] - a4 * S2 * S2 * out[static_cast<std::size_t>(k - 1)]) / a1;
  }
}

void require_d2(const Domain& dom) {
  if (dom.d != 2) throw ParameterError("explicit bases are implemented for d = 2");
}

}  // namespace

std::size_t even_space_dim(DomainKind kind, int n) {
  if (n < 0) return 0;
  if (kind == DomainKind::Surface) return static_cast<std::size_t>(n) + 1;
  std::size_t s = 0;
  for (int k = 0; 2 * k <= n; ++k) s += static_cast<std::size_t>(n - 2 * k) + 1;
  return s;
}

double spectral_eigenvalue(const Domain& dom, const Weight& w, int k) {
  if (dom.kind == DomainKind::Surface) return k * (k + 2.0 * w.gamma + dom.d - 1.0);
  return k * (k + 2.0 * w.gamma + 2.0 * w.mu + dom.d);
}

BasisSet::BasisSet(const Domain& dom, const Weight& w, int max_degree)
    : dom_(dom), w_(w), max_degree_(max_degree) {
  validate(dom, w);
  require_d2(dom);
  if (max_degree < 0) throw ParameterError("negative basis degree");
  const bool solid = dom.kind == DomainKind::Solid;
  for (int n = 0; n <= max_degree; ++n) {
    offsets_.push_back(index_.size());
    for (int k = 0; 2 * k <= n; ++k) {
      const int m = n - 2 * k;
      if (!solid) {
        index_.push_back({n, k, m, 0, m, 0});
        if (m > 0) index_.push_back({n, k, m, 0, m, 1});
        continue;
      }
      for (int j = 0; 2 * j <= m; ++j) {
        const int l = m - 2 * j;
        index_.push_back({n, k, m, j, l, 0});
        if (l > 0) index_.push_back({n, k, m, j, l, 1});
      }
    }
  }
  offsets_.push_back(index_.size());
  norms_.reserve(index_.size());
  for (const auto& idx : index_) {
    norms_.push_back(basis_norm(dom, w, idx));
    inv_sqrt_norms_.push_back(1.0 / std::sqrt(norms_.back()));
  }
}

void BasisSet::eval(const Point& p, std::span<double> out, bool orthonormal) const {
  if (out.size() < index_.size()) throw ParameterError("basis output span too short");
  const int N = max_degree_;
  const double s2 = std::max(0.0, p.t * p.t - dom_.rho * dom_.rho);
  const double u = 2.0 * s2 - 1.0;
  const double a = w_.gamma - 0.5;
  const bool solid = dom_.kind == DomainKind::Solid;
  const double b0 = solid ? w_.beta + w_.mu : w_.beta;

  // harmonics: cos/sin parts of (x1 + i x2)^l, scaled by sqrt(2) for l >= 1
  std::vector<double> hc(static_cast<std::size_t>(N) + 1), hs(static_cast<std::size_t>(N) + 1);
  {
    const std::complex<double> z(p.x[0], p.x[1]);
    std::complex<double> zp(1.0, 0.0);
    hc[0] = 1.0;
    hs[0] = 0.0;
    for (int l = 1; l <= N; ++l) {
      zp *= z;
      hc[static_cast<std::size_t>(l)] = std::numbers::sqrt2 * zp.real();
      hs[static_cast<std::size_t>(l)] = std::numbers::sqrt2 * zp.imag();
    }
  }
  // radial factors P_k^{(a, b0 + m)}(u) for every m
  std::vector<std::vector<double>> radial(static_cast<std::size_t>(N) + 1);
  for (int m = 0; m <= N; ++m) {
    const int kmax = (N - m) / 2;
    radial[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(kmax) + 1);
    jacobi_all(kmax, {a, b0 + m}, u, radial[static_cast<std::size_t>(m)]);
  }
  // ball factors S^{2j} P_j^{(mu - 1/2, l)} for every l
  std::vector<std::vector<double>> ball;
  if (solid) {
    ball.resize(static_cast<std::size_t>(N) + 1);
    const double x2 = p.norm2();
    for (int l = 0; l <= N; ++l) {
      const int jmax = (N - l) / 2;
      ball[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(jmax) + 1);
      homogeneous_jacobi(jmax, w_.mu - 0.5, static_cast<double>(l), x2, s2, ball[static_cast<std::size_t>(l)]);
    }
  }
  for (std::size_t i = 0; i < index_.size(); ++i) {
    const BasisIndex& id = index_[i];
    const auto l = static_cast<std::size_t>(id.l);
    double v = radial[static_cast<std::size_t>(id.m)][static_cast<std::size_t>(id.k)] * (id.trig == 0 ? hc[l] : hs[l]);
    if (solid) v *= ball[l][static_cast<std::size_t>(id.j)];
    out[i] = orthonormal ? v * inv_sqrt_norms_[i] : v;
  }
}

std::vector<double> BasisSet::eval(const Point& p, bool orthonormal) const {
  std::vector<double> v(index_.size());
  eval(p, v, orthonormal);
  return v;
}

double basis_norm(const Domain& dom, const Weight& w, const BasisIndex& idx) {
  require_d2(dom);
  const double a = w.gamma - 0.5;
  if (dom.kind == DomainKind::Surface) return shifted_norm(a, w.beta + dom.d / 2.0 - 1.0, idx.m, idx.k);
  const double radial = shifted_norm(a, w.beta + w.mu + dom.d / 2.0 - 1.0, idx.m, idx.k);
  return radial * shifted_norm(w.mu - 0.5, (dom.d - 2) / 2.0, idx.l, idx.j);
}

double basis_eval(const Domain& dom, const Weight& w, const BasisIndex& idx, const Point& p) {
  validate(dom, w);
  require_d2(dom);
  if (idx.k < 0 || idx.m < 0 || idx.n != 2 * idx.k + idx.m || idx.trig < 0 || idx.trig > 1 ||
      (idx.trig == 1 && idx.l == 0)) {
    throw ParameterError("basis index out of range");
  }
  const bool solid = dom.kind == DomainKind::Solid;
  if (solid ? (idx.j < 0 || idx.m != 2 * idx.j + idx.l) : (idx.j != 0 || idx.l != idx.m)) {
    throw ParameterError("basis index out of range");
  }
  const double s2 = std::max(0.0, p.t * p.t - dom.rho * dom.rho);
  const double b0 = solid ? w.beta + w.mu : w.beta;
  double v = jacobi_eval(idx.k, {w.gamma - 0.5, b0 + idx.m}, 2.0 * s2 - 1.0);
  const std::complex<double> z = std::pow(std::complex<double>(p.x[0], p.x[1]), idx.l);
  if (idx.l > 0) v *= std::numbers::sqrt2 * (idx.trig == 0 ? z.real() : z.imag());
  if (solid) {
    std::vector<double> h(static_cast<std::size_t>(idx.j) + 1);
    homogeneous_jacobi(idx.j, w.mu - 0.5, static_cast<double>(idx.l), p.norm2(), s2, h);
    v *= h[static_cast<std::size_t>(idx.j)];
  }
  return v;
}

double basis_kernel(const BasisSet& basis, int n, const Point& p, const Point& q) {
  const auto vp = basis.eval(p), vq = basis.eval(q);
  double s = 0.0;
  for (std::size_t i = basis.begin(n); i < basis.begin(n + 1); ++i) s += vp[i] * vq[i];
  return s;
}

}  // namespace cf
