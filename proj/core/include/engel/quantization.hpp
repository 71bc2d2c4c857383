#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "engel/grid_operator.hpp"

namespace engel {

// Phase-space symbol a(position, frequency). When `polynomial` is present the
// symbol equals sum_n polynomial[n](position) * frequency^n and quantization
// is done exactly by spectral differentiation.
struct KNSymbol {
  using Function = std::function<Complex(double position, double frequency)>;
  using Coefficient = std::function<Complex(double position)>;

  Function value;
  std::optional<std::vector<Coefficient>> polynomial;

  Complex operator()(double position, double frequency) const { return value(position, frequency); }

  static KNSymbol from_function(Function f);
  static KNSymbol polynomial_in_frequency(std::vector<Coefficient> coefficients);
  static KNSymbol constant(Complex c);
  static KNSymbol position_only(Coefficient g);
};

struct XiQuadrature {
  double cutoff = 0.0;  // 0 selects the grid Nyquist frequency pi/h
  int panels = 0;       // 0 selects N/2 panels
  int order = 16;
  // Symbols without a closed form must satisfy |a| <= decay_tolerance * max|a|
  // on the cutoff boundary.
  double decay_tolerance = 1e-6;
};

// M(j,k) = h (2 pi)^{-1} int e^{i (u_j - v_k) xi} a(v_k, xi) d xi.
GridOperator kn_quantize(const KNSymbol& a, const Grid1D& grid, const XiQuadrature& xi = {});

// M(j,k) = h (2 pi)^{-1} int e^{i (u_j - v_k) xi} a((u_j + v_k) / 2, xi) d xi.
GridOperator weyl_quantize(const KNSymbol& a, const Grid1D& grid, const XiQuadrature& xi = {});

// -i d/du on the grid.
GridOperator frequency_operator(const Grid1D& grid, int power = 1);

}  // namespace engel
