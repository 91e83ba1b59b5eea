// Periodic 2-D grid bookkeeping: the physical box [-L, L)^2 sampled with n
// points per axis and its frequency lattice xi = (pi/L) k, k in [-n/2, n/2).

#pragma once

#include <cstdint>
#include <vector>

namespace epdw {

struct GridSpec {
  int n = 0;
  double half_width = 0.0;  // L

  GridSpec() = default;
  GridSpec(int n_in, double half_width_in);

  double dx() const { return 2.0 * half_width / n; }
  double freq_step() const;

  // wavenumber index in [-n/2, n/2) for storage row/col k in [0, n)
  int signed_index(int k) const { return k < n / 2 ? k : k - n; }
  double xi(int k) const { return freq_step() * signed_index(k); }
  double coord(int i) const { return -half_width + i * dx(); }

  std::size_t size() const { return std::size_t(n) * n; }
  std::size_t at(int iy, int ix) const { return std::size_t(iy) * n + ix; }

  bool operator==(const GridSpec& o) const { return n == o.n && half_width == o.half_width; }

  // Enforces the wrap-around guard L >= 2 (1 + (t_final - 1)) for compactly
  // supported data and unit propagation speed.
  void validate_for_final_time(double t_final) const;
};

// Sorted unique frequency magnitudes of the lattice plus a per-mode shell
// index; multiplier tables are built per shell, not per mode.
struct RadialIndex {
  std::vector<double> magnitudes;
  std::vector<std::uint32_t> shell_of_mode;  // n*n entries, row-major

  static RadialIndex build(const GridSpec& grid);
};

}  // namespace epdw
