#pragma once

#include <array>
#include <vector>

#include "engel/quantization.hpp"
#include "engel/representation.hpp"
#include "engel/test_function.hpp"

namespace engel {

// (2 pi)^{-2} int f(x) e^{-i x.xi} dx.
Complex euclidean_ft4(const TestFunction4& f, const std::array<double, 4>& xi);

// w(v) = (lambda v^2/2 - mu/(2 lambda), -lambda v, lambda): the frequencies
// in (x2, x3, x4) seen by pi(f) at position v.
std::array<double, 3> frequency_curve(const RepParams& p, double v);

// a(v, xi) = (2 pi)^2 F4 f(xi, w(v)); pi(f) is its Kohn-Nirenberg quantization.
KNSymbol lambda_mu_symbol(const TestFunction4& f, const RepParams& p);

struct DirectOptions {
  double rel_tol = 1e-12;
  int order = 20;
  double window_sigmas = 12.0;
};

// (pi(f) h)(u) = int f(x) (pi(x)^* h)(u) dx, with the (x2, x3, x4) integral
// done in closed form and the x1 integral by adaptive quadrature.
Complex gft_direct(const TestFunction4& f, const RepParams& p, const Wavepacket& h, double u,
                   const DirectOptions& opt = {});

GridOperator gft_via_symbol(const TestFunction4& f, const RepParams& p, const Grid1D& grid,
                            const XiQuadrature& xi = {});

// K(u, v) = constant * F3 f(sign * (u - v), w(v)).
struct KernelConvention {
  int sign = 1;
  double constant = 0.0;  // 0 selects (2 pi)^{3/2}
  double value() const;
};

Complex kernel(const TestFunction4& f, const RepParams& p, double u, double v, const KernelConvention& conv = {});
GridOperator gft_via_kernel(const TestFunction4& f, const RepParams& p, const Grid1D& grid,
                            const KernelConvention& conv = {});

// Intervals of v where K(u, v) may be non-negligible for the given u.
std::vector<Interval> kernel_v_windows(const TestFunction4& f, const RepParams& p, double u, double sigmas = 9.0);
// Intervals of v where w(v) meets the frequency box of f.
std::vector<Interval> frequency_v_windows(const TestFunction4& f, const RepParams& p, double sigmas = 9.0);

// int K(u, v) h(v) dv by adaptive quadrature.
Complex kernel_apply(const TestFunction4& f, const RepParams& p, const Wavepacket& h, double u,
                     const KernelConvention& conv = {}, double rel_tol = 1e-12);

struct KernelCalibration {
  int sign = 1;
  Complex fitted_constant;     // least-squares C for the selected sign
  double residual_plus = 0.0;  // relative residual with sign +1
  double residual_minus = 0.0;
  double reference_constant = 0.0;  // (2 pi)^{3/2}
};

// Fits K(u, v) = C * F3 f(+-(u - v), w(v)) against gft_direct at the sample
// points and reports which sign reproduces the defining integral.
KernelCalibration calibrate_kernel(const TestFunction4& f, const RepParams& p, const Wavepacket& h,
                                   const std::vector<double>& samples);

struct JacobianReport {
  Poly4 determinant;  // in the variables (u, v, lambda, mu)
  bool constant = false;
  Rational absolute_value;
};

// det d(w1..w4)/d(u, v, lambda, mu) for w = (u - v, lambda v^2/2 - mu/(2 lambda), -lambda v, lambda).
JacobianReport change_of_variables_jacobian();

// int first(y) second(y^{-1} o x) dy by tensor Gauss-Legendre quadrature over
// the support box of `first`.
Complex group_convolution(const TestFunction4& first, const TestFunction4& second, const Point& x,
                          const TensorQuadrature& q = {8, 10});

}  // namespace engel
