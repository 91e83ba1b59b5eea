#include "epdw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace epdw {

namespace {
// FFTW's planner is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2D::Fft2D(int n) : n_(n), in_(std::size_t(n) * n), out_(std::size_t(n) * n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto* in = reinterpret_cast<fftw_complex*>(in_.data());
  auto* out = reinterpret_cast<fftw_complex*>(out_.data());
  // FFTW_ESTIMATE keeps plans deterministic run to run.
  plan_fwd_ = fftw_plan_dft_2d(n, n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_2d(n, n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (plan_fwd_ == nullptr || plan_bwd_ == nullptr) {
    throw std::runtime_error("Fft2D: plan creation failed");
  }
}

Fft2D::~Fft2D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Fft2D::forward(const std::vector<std::complex<double>>& phys,
                    std::vector<std::complex<double>>& spec) {
  if (phys.size() != in_.size()) throw std::invalid_argument("Fft2D::forward: size mismatch");
  in_ = phys;
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  spec.resize(out_.size());
  const double scale = 1.0 / (double(n_) * n_);
  for (std::size_t i = 0; i < out_.size(); ++i) spec[i] = out_[i] * scale;
}

void Fft2D::inverse(const std::vector<std::complex<double>>& spec,
                    std::vector<std::complex<double>>& phys) {
  if (spec.size() != in_.size()) throw std::invalid_argument("Fft2D::inverse: size mismatch");
  in_ = spec;
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  phys = out_;
}

void Fft2D::forward_real(const std::vector<double>& phys, std::vector<std::complex<double>>& spec) {
  if (phys.size() != in_.size()) throw std::invalid_argument("Fft2D::forward_real: size mismatch");
  for (std::size_t i = 0; i < phys.size(); ++i) in_[i] = phys[i];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  spec.resize(out_.size());
  const double scale = 1.0 / (double(n_) * n_);
  for (std::size_t i = 0; i < out_.size(); ++i) spec[i] = out_[i] * scale;
}

void Fft2D::inverse_real(const std::vector<std::complex<double>>& spec,
                         std::vector<double>& phys) {
  if (spec.size() != in_.size()) throw std::invalid_argument("Fft2D::inverse_real: size mismatch");
  in_ = spec;
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  phys.resize(out_.size());
  for (std::size_t i = 0; i < out_.size(); ++i) phys[i] = out_[i].real();
}

Fft2D& fft_for(int n) {
  thread_local std::map<int, std::unique_ptr<Fft2D>> plans;
  auto it = plans.find(n);
  if (it == plans.end()) {
    it = plans.emplace(n, std::make_unique<Fft2D>(n)).first;
  }
  return *it->second;
}

}  // namespace epdw
