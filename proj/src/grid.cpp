#include "epdw/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace epdw {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(int n_in, double half_width_in) : n(n_in), half_width(half_width_in) {
  if (!is_power_of_two(n) || n < 64) {
    throw std::invalid_argument("GridSpec: n must be a power of two >= 64, got " +
                                std::to_string(n));
  }
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("GridSpec: domain half-width must be positive");
  }
}

double GridSpec::freq_step() const { return kPi / half_width; }

void GridSpec::validate_for_final_time(double t_final) const {
  const double needed = 2.0 * (1.0 + (t_final - 1.0));
  if (half_width < needed - 1e-12) {
    throw std::invalid_argument("GridSpec: domain half-width " + std::to_string(half_width) +
                                " is below the wrap-around guard 2*(1 + (t_final - 1)) = " +
                                std::to_string(needed));
  }
}

RadialIndex RadialIndex::build(const GridSpec& grid) {
  const int n = grid.n;
  const int half = n / 2;
  const std::int64_t max_r2 = 2ll * half * half;

  // shell id per integer squared radius (|a|^2 + |b|^2 <= 2 (n/2)^2)
  std::vector<std::int32_t> id_of_r2(std::size_t(max_r2) + 1, -1);
  std::int32_t shells = 0;
  for (int a = 0; a <= half; ++a) {
    for (int b = a; b <= half; ++b) {
      std::int64_t r2 = std::int64_t(a) * a + std::int64_t(b) * b;
      if (id_of_r2[r2] < 0) id_of_r2[r2] = shells++;
    }
  }
  // compact: renumber in increasing r2 order so magnitudes come out sorted
  std::int32_t next = 0;
  for (std::int64_t r2 = 0; r2 <= max_r2; ++r2) {
    if (id_of_r2[r2] >= 0) id_of_r2[r2] = next++;
  }

  RadialIndex out;
  out.magnitudes.resize(next);
  const double step = grid.freq_step();
  for (std::int64_t r2 = 0; r2 <= max_r2; ++r2) {
    if (id_of_r2[r2] >= 0) out.magnitudes[id_of_r2[r2]] = step * std::sqrt(double(r2));
  }
  out.shell_of_mode.resize(grid.size());
  for (int iy = 0; iy < n; ++iy) {
    const std::int64_t b = grid.signed_index(iy);
    for (int ix = 0; ix < n; ++ix) {
      const std::int64_t a = grid.signed_index(ix);
      out.shell_of_mode[grid.at(iy, ix)] = std::uint32_t(id_of_r2[a * a + b * b]);
    }
  }
  return out;
}

}  // namespace epdw
