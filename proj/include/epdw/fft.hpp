// Thin FFTW wrapper for the n x n complex transforms. Coefficients follow
// the pseudospectral convention c_k = (1/n^2) sum_j v(x_j) e^{-i xi_k x_j up
// to the uniform lattice phase}, i.e. plain DFT coefficients scaled by 1/n^2;
// the inverse is the unscaled backward DFT.

#pragma once

#include <complex>
#include <vector>

namespace epdw {

class Fft2D {
 public:
  explicit Fft2D(int n);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int n() const { return n_; }

  // physical -> spectral (with the 1/n^2 scale)
  void forward(const std::vector<std::complex<double>>& phys,
               std::vector<std::complex<double>>& spec);
  // spectral -> physical
  void inverse(const std::vector<std::complex<double>>& spec,
               std::vector<std::complex<double>>& phys);

  // conveniences for real fields
  void forward_real(const std::vector<double>& phys, std::vector<std::complex<double>>& spec);
  void inverse_real(const std::vector<std::complex<double>>& spec, std::vector<double>& phys);

 private:
  int n_;
  void* plan_fwd_;
  void* plan_bwd_;
  std::vector<std::complex<double>> in_;
  std::vector<std::complex<double>> out_;
};

// Per-thread plan registry; plan creation is serialized internally.
Fft2D& fft_for(int n);

}  // namespace epdw
