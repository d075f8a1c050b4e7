#include <cmath>

#include "cf/orthopoly.hpp"

namespace cf {

namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// TypeA profile b: 1 on [0,1], 0 beyond 2.
double lowpass(double t) {
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  return smooth_step(2.0 - t);
}

double bandpass(double t) {
  if (t <= 0.5 || t >= 2.0) return 0.0;
  if (t <= 1.0) return std::sqrt(smooth_step(2.0 * t - 1.0));
  return std::sqrt(smooth_step(2.0 - t));
}

}  // namespace

double smooth_step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double h0 = bump(s), h1 = bump(1.0 - s);
  return h0 / (h0 + h1);
}

double cutoff_eval(const Cutoff& c, double t) {
  switch (c.kind) {
    case CutoffKind::TypeA:
      return lowpass(t);
    case CutoffKind::TypeB:
    case CutoffKind::FrameWindow:
      return bandpass(t);
  }
  return 0.0;
}

double window_eval(int j, double t) {
  if (j <= 0) return std::sqrt(lowpass(t));
  const double scale = std::ldexp(1.0, -j);
  const double diff = lowpass(t * scale) - lowpass(2.0 * t * scale);
  return diff > 0.0 ? std::sqrt(diff) : 0.0;
}

}  // namespace cf
