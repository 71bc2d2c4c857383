#pragma once

// Heisenberg-side comparison objects: lambda-symbol renormalisation and
// properties of the Weyl quantization.

#include <functional>
#include <vector>

#include "engel/quantization.hpp"

namespace engel {

struct LambdaSymbol {
  std::function<Complex(double xi, double u)> a;
  double lambda = 1.0;
};

using PhaseFunction = std::function<Complex(double, double)>;

// a~(p, q) = a(p / sqrt|lambda|, q / sqrt(lambda)). Only lambda > 0 is
// accepted; for lambda < 0 the second factor has no real meaning and
// std::domain_error is thrown.
PhaseFunction renormalize(const LambdaSymbol& a);

// Inverse substitution a(xi, u) = a~(sqrt|lambda| xi, sqrt(lambda) u), lambda > 0.
LambdaSymbol unrenormalize(const PhaseFunction& renormalized, double lambda);

// a_s(u, xi) = a(s u, xi / s); keeps the polynomial form when present.
KNSymbol dilate_symbol(const KNSymbol& a, double s);

// Relative residual of U_s Op(a) f = Op(a_s) U_s f on |u| <= half_width / 2,
// U_s f(u) = sqrt(s) f(s u), for a fixed set of Gaussian probes.
double dilation_residual(const KNSymbol& a, const Grid1D& grid, double s, const XiQuadrature& xi = {});

struct WeylCheckOptions {
  XiQuadrature xi;
  int eigenvalue_count = 5;
  std::vector<double> scales{0.5, 1.0, 2.0};
  std::vector<double> real_samples{-2.0, -0.5, 0.0, 0.7, 1.9};
};

struct WeylReport {
  bool real_symbol = false;  // imaginary part vanishes on the sample lattice
  double hermitian_defect = 0.0;
  std::vector<double> lowest_eigenvalues;  // of the Hermitian part
  std::vector<double> scales;
  std::vector<double> dilation_residuals;
};

WeylReport weyl_roundtrip_check(const KNSymbol& a, const Grid1D& grid, const WeylCheckOptions& opt = {});

// u^2 + xi^2 in polynomial form.
KNSymbol harmonic_oscillator_symbol();

}  // namespace engel
