#include "epdw/params.hpp"

#include <cmath>

namespace epdw {

double default_eps1(double p) {
  // Ascending log grid over (0, 1); the admissible set is an interval
  // anchored at 0, so the first hit is the smallest grid value.
  constexpr int kPoints = 240;
  constexpr double kLo = 1e-3;
  constexpr double kHi = 0.99;
  double fallback = -1.0;
  for (int i = 0; i < kPoints; ++i) {
    const double eps1 = kLo * std::pow(kHi / kLo, double(i) / (kPoints - 1));
    ContractionParams cp(eps1);
    if (cp.admissible(p, 0.1)) return eps1;
    if (fallback < 0.0 && cp.admissible(p, 0.0)) fallback = eps1;
  }
  if (fallback > 0.0) return fallback;
  throw std::invalid_argument("default_eps1: no admissible eps1 for p = " + std::to_string(p));
}

}  // namespace epdw
