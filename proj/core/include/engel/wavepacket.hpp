#pragma once

#include <complex>
#include <vector>

#include "engel/grid.hpp"

namespace engel {

// h(u) = exp(a u^2 + b u + c) with Re(a) < 0.
class Wavepacket {
 public:
  Wavepacket(Complex a, Complex b, Complex c);

  static Wavepacket gaussian(double width = 1.0, double center = 0.0, double momentum = 0.0);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }

  Complex operator()(double u) const { return std::exp((a_ * u + b_) * u + c_); }
  ComplexVector sample(const Grid1D& grid) const;

  double norm_squared() const;
  double norm() const;

  // Returns u -> h(u + s).
  Wavepacket shifted(double s) const;
  // Returns u -> exp(p u^2 + q u + r) h(u).
  Wavepacket modulated(Complex p, Complex q, Complex r) const;

 private:
  Complex a_, b_, c_;
};

// <g, h> = int conj(g) h du, closed form.
Complex inner_product(const Wavepacket& g, const Wavepacket& h);

// Closed form of int P(u) exp(a u^2 + b u + c) du for Re(a) < 0, P given by
// coefficients in increasing degree.
Complex gaussian_moment_integral(const std::vector<Complex>& poly, Complex a, Complex b, Complex c);

}  // namespace engel
