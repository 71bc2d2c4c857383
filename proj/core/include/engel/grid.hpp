#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace engel {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Uniform periodic grid u_k = -L + k h, k = 0..N-1, h = 2L/N, quadrature
// weight h per point. Copies share the cached spectral data.
class Grid1D {
 public:
  Grid1D(double half_width, int count);

  double half_width() const { return half_width_; }
  int size() const { return count_; }
  double spacing() const { return spacing_; }
  double point(int k) const { return -half_width_ + k * spacing_; }
  const RealVector& points() const { return spectral_->points; }
  // Angular wavenumbers in DFT order; index N/2 carries -pi/h.
  const RealVector& wavenumbers() const { return spectral_->wavenumbers; }
  double nyquist() const;

  // Unitary DFT matrix F with F(m,k) = exp(-2 pi i m k / N) / sqrt(N).
  const ComplexMatrix& dft() const { return spectral_->dft; }

  // F^* diag(multiplier(k_m)) F.
  ComplexMatrix fourier_multiplier(const std::function<Complex(double)>& multiplier) const;

  // d/du via the DFT (skew-Hermitian, Nyquist mode included).
  const ComplexMatrix& derivative() const { return spectral_->derivative; }

  ComplexVector sample(const std::function<Complex(double)>& f) const;

  // Band-limited (trigonometric) interpolation of grid samples at y, treating
  // the samples as one period of a periodic function.
  Complex interpolate(const ComplexVector& samples, double y) const;

  // Discrete L2 inner product h * sum conj(a) b.
  Complex inner(const ComplexVector& a, const ComplexVector& b) const;
  double norm(const ComplexVector& a) const;

  friend bool operator==(const Grid1D& a, const Grid1D& b) {
    return a.count_ == b.count_ && a.half_width_ == b.half_width_;
  }

 private:
  struct Spectral {
    RealVector points;
    RealVector wavenumbers;
    ComplexMatrix dft;
    ComplexMatrix derivative;
  };

  double half_width_;
  int count_;
  double spacing_;
  std::shared_ptr<const Spectral> spectral_;
};

}  // namespace engel
