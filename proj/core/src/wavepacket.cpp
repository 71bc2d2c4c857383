#include "engel/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace engel {

Wavepacket::Wavepacket(Complex a, Complex b, Complex c) : a_(a), b_(b), c_(c) {
  if (!(a.real() < 0.0)) throw std::invalid_argument("Wavepacket: Re(a) must be negative");
}

Wavepacket Wavepacket::gaussian(double width, double center, double momentum) {
  if (!(width > 0.0)) throw std::invalid_argument("Wavepacket::gaussian: width must be positive");
  const double a = -0.5 / (width * width);
  return {Complex(a, 0.0), Complex(-2.0 * a * center, momentum), Complex(a * center * center, 0.0)};
}

ComplexVector Wavepacket::sample(const Grid1D& grid) const {
  return grid.sample([this](double u) { return (*this)(u); });
}

double Wavepacket::norm_squared() const { return inner_product(*this, *this).real(); }

double Wavepacket::norm() const { return std::sqrt(norm_squared()); }

Wavepacket Wavepacket::shifted(double s) const { return {a_, b_ + 2.0 * a_ * s, c_ + (a_ * s + b_) * s}; }

Wavepacket Wavepacket::modulated(Complex p, Complex q, Complex r) const { return {a_ + p, b_ + q, c_ + r}; }

Complex gaussian_moment_integral(const std::vector<Complex>& poly, Complex a, Complex b, Complex c) {
  if (!(a.real() < 0.0)) throw std::invalid_argument("gaussian_moment_integral: Re(a) must be negative");
  // Normal law with precision q = -2a and mean b / q.
  const Complex q = -2.0 * a;
  const Complex mean = b / q;
  const Complex var = 1.0 / q;
  const Complex base = std::sqrt(2.0 * std::numbers::pi / q) * std::exp(c + 0.5 * b * b / q);
  Complex sum = 0.0;
  Complex prev = 0.0, cur = 1.0;  // E[X^{n-1}], E[X^n]
  for (std::size_t n = 0; n < poly.size(); ++n) {
    sum += poly[n] * cur;
    const Complex next = mean * cur + static_cast<double>(n) * var * prev;
    prev = cur;
    cur = next;
  }
  return base * sum;
}

Complex inner_product(const Wavepacket& g, const Wavepacket& h) {
  return gaussian_moment_integral({1.0}, std::conj(g.a()) + h.a(), std::conj(g.b()) + h.b(),
                                  std::conj(g.c()) + h.c());
}

}  // namespace engel
