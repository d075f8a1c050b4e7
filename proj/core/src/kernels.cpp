#include <algorithm>
#include <cmath>
#include <numbers>

#include "cf/error.hpp"
#include "cf/kernels.hpp"

namespace cf {

namespace {

int dimension(const Domain& dom) { return dom.kind == DomainKind::Surface ? dom.d : dom.d + 1; }

double sgn1(double v) { return v < 0.0 ? -1.0 : 1.0; }

// Weighted arguments (weight, zeta) of the addition formula at the cone (rho = 0). The
// inner product is taken in Cartesian x, so the kernel is even in t and in s.
template <class F>
void for_each_argument(const KernelContext& ctx, const Point& p, const Point& q, F&& f) {
  if (p.dim != ctx.dom.d || q.dim != ctx.dom.d) throw ParameterError("point dimension does not match domain");
  if (ctx.dom.rho > 0.0 && sgn1(p.t) != sgn1(q.t)) throw CrossSheetError("kernel arguments lie on different sheets");
  const Point a = rho_lift(p, ctx.dom.rho, 0.0);
  const Point b = rho_lift(q, ctx.dom.rho, 0.0);
  const double xy = dot(a, b);
  const double cv = std::sqrt(std::max(0.0, 1.0 - a.t * a.t)) * std::sqrt(std::max(0.0, 1.0 - b.t * b.t));

  const auto visit_v = [&](double base, double wu) {
    if (ctx.v_endpoints) {
      f(0.5 * wu, base + cv);
      f(0.5 * wu, base - cv);
      return;
    }
    for (int i = 0; i < ctx.vrule.size(); ++i) {
      f(wu * ctx.vrule.weights[static_cast<std::size_t>(i)], base + ctx.vrule.nodes[static_cast<std::size_t>(i)] * cv);
    }
  };

  if (ctx.dom.kind == DomainKind::Surface) {
    visit_v(xy, 1.0);
    return;
  }
  const double cu = std::sqrt(std::max(0.0, a.t * a.t - a.norm2())) * std::sqrt(std::max(0.0, b.t * b.t - b.norm2()));
  if (ctx.u_endpoints) {
    visit_v(xy + cu, 0.5);
    visit_v(xy - cu, 0.5);
    return;
  }
  for (int i = 0; i < ctx.urule.size(); ++i) {
    visit_v(xy + ctx.urule.nodes[static_cast<std::size_t>(i)] * cu, ctx.urule.weights[static_cast<std::size_t>(i)]);
  }
}

}  // namespace

KernelContext make_kernel_context(const Domain& dom, const Weight& w, int nmax) {
  validate(dom, w);
  if (nmax < 0) throw ParameterError("negative kernel degree");
  KernelContext ctx;
  ctx.dom = dom;
  ctx.w = w;
  ctx.nmax = nmax;
  const int size = (nmax + 2) / 2 + 1;
  if (!(w.gamma >= 0.0)) throw ParameterError("addition formula needs gamma >= 0");
  if (dom.kind == DomainKind::Surface) {
    if (w.beta != 0.0) throw ParameterError("surface addition formula needs beta = 0");
    ctx.lambda = w.gamma + (dom.d - 1) / 2.0;
  } else {
    if (w.beta != 0.5) throw ParameterError("solid addition formula needs beta = 1/2");
    if (!(w.mu >= 0.0)) throw ParameterError("solid addition formula needs mu >= 0");
    ctx.lambda = w.gamma + w.mu + dom.d / 2.0;
    ctx.u_endpoints = w.mu == 0.0;
    if (!ctx.u_endpoints) ctx.urule = gauss_jacobi(size, {w.mu - 1.0, w.mu - 1.0});
  }
  ctx.v_endpoints = w.gamma == 0.0;
  if (!ctx.v_endpoints) ctx.vrule = gauss_jacobi(size, {w.gamma - 1.0, w.gamma - 1.0});
  return ctx;
}

KernelSeries::KernelSeries(const KernelContext& ctx, std::vector<double> coeff, int table_points)
    : ctx_(ctx), coeff_(std::move(coeff)) {
  if (coeff_.empty()) coeff_.push_back(0.0);
  if (static_cast<int>(coeff_.size()) - 1 > ctx_.nmax) throw ParameterError("series degree exceeds kernel context");
  if (table_points > 0) {
    // uniform in the angle so the peak at z = 1 is resolved
    table_.resize(static_cast<std::size_t>(table_points) + 3);
    step_ = std::numbers::pi / table_points;
    for (int i = -1; i <= table_points + 1; ++i) {
      table_[static_cast<std::size_t>(i + 1)] = exact_profile(std::cos(i * step_));
    }
  }
}

double KernelSeries::exact_profile(double z) const {
  const int top = static_cast<int>(coeff_.size()) - 1;
  // forward recurrence for C_k^lambda, accumulated with the Z normalization
  const double lam = ctx_.lambda;
  double prev = 1.0, cur = 2.0 * lam * z;
  double sum = coeff_[0];
  if (top >= 1) sum += coeff_[1] * (1.0 + lam) / lam * cur;
  for (int k = 1; k < top; ++k) {
    const double next = (2.0 * (k + lam) * z * cur - (k + 2.0 * lam - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    const double c = coeff_[static_cast<std::size_t>(k + 1)];
    if (c != 0.0) sum += c * (k + 1.0 + lam) / lam * cur;
  }
  return sum;
}

double KernelSeries::profile(double z) const {
  z = std::clamp(z, -1.0, 1.0);
  if (table_.empty()) return exact_profile(z);
  const double pos = std::acos(z) / step_;
  const int n = static_cast<int>(table_.size()) - 3;
  const int i = std::clamp(static_cast<int>(pos), 0, n - 1);
  const double f = pos - i;
  const double* y = &table_[static_cast<std::size_t>(i)];  // y[0..3] at i-1..i+2
  // cubic Lagrange through four neighbours
  return -f * (f - 1.0) * (f - 2.0) / 6.0 * y[0] + (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0 * y[1] -
         (f + 1.0) * f * (f - 2.0) / 2.0 * y[2] + (f + 1.0) * f * (f - 1.0) / 6.0 * y[3];
}

double KernelSeries::operator()(const Point& p, const Point& q) const {
  double sum = 0.0;
  for_each_argument(ctx_, p, q, [&](double wt, double z) { sum += wt * profile(z); });
  return sum;
}

double series_kernel(const KernelContext& ctx, std::span<const double> coeff, const Point& p, const Point& q) {
  return KernelSeries(ctx, {coeff.begin(), coeff.end()})(p, q);
}

double reprod_kernel(const KernelContext& ctx, int n, const Point& p, const Point& q) {
  if (n < 0) throw ParameterError("negative degree");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c.back() = 1.0;
  return series_kernel(ctx, c, p, q);
}

std::vector<double> localized_coefficients(int n, const Cutoff& c) {
  if (n < 1) throw ParameterError("localized kernel needs n >= 1");
  std::vector<double> a(2 * static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= 2 * n; ++k) a[static_cast<std::size_t>(k)] = cutoff_eval(c, static_cast<double>(k) / n);
  return a;
}

double localized_kernel(const KernelContext& ctx, int n, const Cutoff& c, const Point& p, const Point& q) {
  return series_kernel(ctx, localized_coefficients(n, c), p, q);
}

double derivative_kernel(const KernelContext& ctx, int n, const Cutoff& c, double r, const Point& p,
                         const Point& q) {
  if (!(r > 0.0)) throw ParameterError("derivative order must be positive");
  auto a = localized_coefficients(n, c);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] *= std::pow(spectral_eigenvalue(ctx.dom, ctx.w, static_cast<int>(k)), r / 2.0);
  }
  return series_kernel(ctx, a, p, q);
}

double christoffel(const KernelContext& ctx, int n, const Point& p) {
  if (n < 0) throw ParameterError("negative degree");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 1.0);
  return 1.0 / series_kernel(ctx, c, p, p);
}

double kernel_envelope(const Domain& dom, const Weight& w, double n, const Point& p, const Point& q) {
  return std::pow(n, dimension(dom)) / std::sqrt(wn_eval(dom, w, n, p) * wn_eval(dom, w, n, q));
}

}  // namespace cf
