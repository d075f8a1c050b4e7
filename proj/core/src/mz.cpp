#include <algorithm>
#include <cmath>
#include <limits>

#include "cf/error.hpp"
#include "cf/kernels.hpp"
#include "cf/parallel.hpp"
#include "cf/quadrature.hpp"
#include "cf/rng.hpp"

namespace cf {

MZReport mz_check(const Weight& w, int n, const SeparatedSet& nodes, int trials, std::uint64_t seed,
                  int samples_per_cell) {
  if (trials < 1) throw ParameterError("need at least one trial");
  if (samples_per_cell < 0) throw ParameterError("negative sample count");
  const BasisSet basis(nodes.dom, w, n);
  const std::size_t dim = basis.size();
  const auto T = static_cast<std::size_t>(trials);

  const CounterRng rng(seed);
  std::vector<double> coeff(T * dim);
  std::vector<double> energy(T, 0.0);
  for (std::size_t k = 0; k < T; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      coeff[k * dim + i] = rng.normal(k * dim + i);
      energy[k] += coeff[k * dim + i] * coeff[k * dim + i];
    }
  }

  const std::size_t cells = nodes.size();
  std::vector<double> cmax(cells * T), cmin(cells * T), atnode(cells * T), measure(cells);
  parallel_for(cells, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> v(dim);
    for (std::size_t c = lo; c < hi; ++c) {
      measure[c] = cell_measure(nodes, w, c);
      for (std::size_t k = 0; k < T; ++k) {
        cmax[c * T + k] = 0.0;
        cmin[c * T + k] = std::numeric_limits<double>::infinity();
      }
      for (int s = 0; s <= samples_per_cell; ++s) {
        const Point p = s == 0 ? nodes.nodes[c].p
                               : cell_point(nodes, c, halton(static_cast<std::uint64_t>(s), 2),
                                            halton(static_cast<std::uint64_t>(s), 3), halton(static_cast<std::uint64_t>(s), 5));
        basis.eval(p, v);
        for (std::size_t k = 0; k < T; ++k) {
          double f = 0.0;
          for (std::size_t i = 0; i < dim; ++i) f += coeff[k * dim + i] * v[i];
          const double f2 = f * f;
          if (s == 0) atnode[c * T + k] = std::abs(f);
          cmax[c * T + k] = std::max(cmax[c * T + k], f2);
          cmin[c * T + k] = std::min(cmin[c * T + k], f2);
        }
      }
    }
  });

  MZReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.samples_per_cell = samples_per_cell;
  rep.upper_min = rep.lower_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < T; ++k) {
    double up = 0.0, low = 0.0, sup = 0.0, nodesup = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
      up += cmax[c * T + k] * measure[c];
      low += cmin[c * T + k] * measure[c];
      sup = std::max(sup, std::sqrt(cmax[c * T + k]));
      nodesup = std::max(nodesup, atnode[c * T + k]);
    }
    const double ru = up / energy[k];
    const double rl = low > 0.0 ? energy[k] / low : std::numeric_limits<double>::infinity();
    rep.upper_max = std::max(rep.upper_max, ru);
    rep.upper_min = std::min(rep.upper_min, ru);
    rep.lower_max = std::max(rep.lower_max, rl);
    rep.lower_min = std::min(rep.lower_min, rl);
    rep.upper_inf_max = std::max(rep.upper_inf_max, sup / nodesup);
  }
  return rep;
}

}  // namespace cf
