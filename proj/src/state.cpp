#include "epdw/state.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "epdw/fft.hpp"

namespace epdw {

RealField SpectralState::v_physical() const {
  RealField out;
  fft_for(grid.n).inverse_real(vhat, out);
  return out;
}

RealField SpectralState::vt_physical() const {
  RealField out;
  fft_for(grid.n).inverse_real(vthat, out);
  return out;
}

double bump_profile(double x1, double x2, double amplitude) {
  const double r2 = x1 * x1 + x2 * x2;
  if (r2 >= 1.0) return 0.0;
  return amplitude * std::exp(1.0 - 1.0 / (1.0 - r2));
}

CauchyData make_bump_data(const GridSpec& grid, const std::string& kind, double amplitude) {
  CauchyData data;
  data.grid = grid;
  data.u0.assign(grid.size(), 0.0);
  data.u1.assign(grid.size(), 0.0);
  data.profile = "bump[" + kind + "]";
  if (kind != "generic" && kind != "cancel" && kind != "zero") {
    throw std::invalid_argument("make_bump_data: unknown case '" + kind + "'");
  }
  if (kind == "zero") return data;
  const double sign = kind == "cancel" ? -1.0 : 1.0;
  for (int iy = 0; iy < grid.n; ++iy) {
    for (int ix = 0; ix < grid.n; ++ix) {
      const double b = bump_profile(grid.coord(ix), grid.coord(iy), amplitude);
      data.u0[grid.at(iy, ix)] = b;
      data.u1[grid.at(iy, ix)] = sign * b;
    }
  }
  return data;
}

SpectralState make_initial_state(const CauchyData& data, double eps) {
  SpectralState state;
  state.time = 1.0;
  state.grid = data.grid;
  RealField scaled(data.grid.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = eps * data.u0[i];
  fft_for(data.grid.n).forward_real(scaled, state.vhat);
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = eps * data.u1[i];
  fft_for(data.grid.n).forward_real(scaled, state.vthat);
  return state;
}

double mass_outside_radius(const SpectralState& state, double radius) {
  const RealField v = state.v_physical();
  const GridSpec& g = state.grid;
  double outside = 0.0, total = 0.0;
  for (int iy = 0; iy < g.n; ++iy) {
    for (int ix = 0; ix < g.n; ++ix) {
      const double val = v[g.at(iy, ix)];
      const double r = std::hypot(g.coord(ix), g.coord(iy));
      total += val * val;
      if (r > radius) outside += val * val;
    }
  }
  return total > 0.0 ? std::sqrt(outside / total) : 0.0;
}

double energy(const SpectralState& state) {
  const GridSpec& g = state.grid;
  const double box = 2.0 * g.half_width;
  double acc = 0.0;
  for (int iy = 0; iy < g.n; ++iy) {
    const double xy = g.xi(iy);
    for (int ix = 0; ix < g.n; ++ix) {
      const double xx = g.xi(ix);
      const std::size_t idx = g.at(iy, ix);
      acc += std::norm(state.vthat[idx]) + (xx * xx + xy * xy) * std::norm(state.vhat[idx]);
    }
  }
  return 0.5 * box * box * acc;
}

double kinetic_energy(const SpectralState& state) {
  const GridSpec& g = state.grid;
  const double box = 2.0 * g.half_width;
  double acc = 0.0;
  for (const auto& c : state.vthat) acc += std::norm(c);
  return 0.5 * box * box * acc;
}

namespace {

void put_u32(std::ofstream& f, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  f.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ofstream& f, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (bits >> (8 * i)) & 0xff;
  f.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::ifstream& f) {
  unsigned char b[4];
  f.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

double get_f64(std::ifstream& f) {
  unsigned char b[8];
  f.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void save_snapshot(const SpectralState& state, double mu, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("save_snapshot: cannot open " + path);
  f.write("EPDW1", 5);
  put_u32(f, std::uint32_t(state.grid.n));
  put_f64(f, state.grid.half_width);
  put_f64(f, state.time);
  put_f64(f, mu);
  for (double v : state.v_physical()) put_f64(f, v);
  for (double v : state.vt_physical()) put_f64(f, v);
  if (!f) throw std::runtime_error("save_snapshot: write failed for " + path);
}

SpectralState load_snapshot(const std::string& path, double* mu_out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_snapshot: cannot open " + path);
  char magic[5];
  f.read(magic, 5);
  if (!f || std::memcmp(magic, "EPDW1", 5) != 0) {
    throw std::runtime_error("load_snapshot: bad magic in " + path);
  }
  const std::uint32_t n = get_u32(f);
  const double half_width = get_f64(f);
  const double time = get_f64(f);
  const double mu = get_f64(f);
  SpectralState state;
  state.grid = GridSpec(int(n), half_width);
  state.time = time;
  RealField v(state.grid.size()), vt(state.grid.size());
  for (auto& x : v) x = get_f64(f);
  for (auto& x : vt) x = get_f64(f);
  if (!f) throw std::runtime_error("load_snapshot: truncated file " + path);
  if (mu_out != nullptr) *mu_out = mu;
  fft_for(state.grid.n).forward_real(v, state.vhat);
  fft_for(state.grid.n).forward_real(vt, state.vthat);
  return state;
}

}  // namespace epdw
