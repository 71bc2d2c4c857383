#include "engel/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace engel {

Grid1D::Grid1D(double half_width, int count) : half_width_(half_width), count_(count) {
  if (!(half_width > 0.0)) throw std::invalid_argument("Grid1D: half-width must be positive");
  if (count < 16 || count % 2 != 0) throw std::invalid_argument("Grid1D: point count must be even and >= 16");
  spacing_ = 2.0 * half_width / count;

  auto s = std::make_shared<Spectral>();
  const int n = count;
  s->points.resize(n);
  s->wavenumbers.resize(n);
  for (int k = 0; k < n; ++k) {
    s->points(k) = -half_width + k * spacing_;
    const int m = k < n / 2 ? k : k - n;
    s->wavenumbers(k) = std::numbers::pi * m / half_width;
  }
  s->dft.resize(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      const double phase = -2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(m) * k) % n) / n;
      s->dft(m, k) = std::polar(scale, phase);
    }
  Eigen::VectorXcd ik(n);
  for (int m = 0; m < n; ++m) ik(m) = Complex(0.0, s->wavenumbers(m));
  s->derivative = s->dft.adjoint() * ik.asDiagonal() * s->dft;
  spectral_ = std::move(s);
}

double Grid1D::nyquist() const { return std::numbers::pi / spacing_; }

ComplexMatrix Grid1D::fourier_multiplier(const std::function<Complex(double)>& multiplier) const {
  Eigen::VectorXcd d(count_);
  for (int m = 0; m < count_; ++m) d(m) = multiplier(spectral_->wavenumbers(m));
  return spectral_->dft.adjoint() * d.asDiagonal() * spectral_->dft;
}

ComplexVector Grid1D::sample(const std::function<Complex(double)>& f) const {
  ComplexVector v(count_);
  for (int k = 0; k < count_; ++k) v(k) = f(point(k));
  return v;
}

Complex Grid1D::interpolate(const ComplexVector& samples, double y) const {
  const ComplexVector coeffs = spectral_->dft * samples;
  const double scale = 1.0 / std::sqrt(static_cast<double>(count_));
  const double offset = y + half_width_;
  Complex sum = 0.0;
  for (int m = 0; m < count_; ++m) sum += coeffs(m) * std::polar(scale, spectral_->wavenumbers(m) * offset);
  return sum;
}

Complex Grid1D::inner(const ComplexVector& a, const ComplexVector& b) const { return spacing_ * a.dot(b); }

double Grid1D::norm(const ComplexVector& a) const { return std::sqrt(spacing_) * a.norm(); }

}  // namespace engel
