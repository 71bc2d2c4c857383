#pragma once

#include <vector>

#include "engel/group.hpp"
#include "engel/quantization.hpp"
#include "engel/wavepacket.hpp"

namespace engel {

// Parameters of pi_{lambda,mu}: lambda != 0, mu real.
struct RepParams {
  double lambda = 1.0;
  double mu = 0.0;

  RepParams() = default;
  RepParams(double lambda_, double mu_);
};

// Phase of pi(x) at u: -mu x2/(2 lambda) + lambda x4 - lambda x3 u + lambda x2 u^2 / 2.
double representation_phase(const RepParams& p, const Point& x, double u);

// (pi(x) h)(u) = exp(i phase(u)) h(u + x1), again a wavepacket.
Wavepacket pi_apply(const RepParams& p, const Point& x, const Wavepacket& h);

// pi(x) on the grid; the shift uses band-limited interpolation and is only
// trusted for |x1| <= L/2.
GridOperator pi_grid(const RepParams& p, const Point& x, const Grid1D& grid);

// Polynomial in u times a wavepacket; closed under the infinitesimal action.
struct PolyWavepacket {
  std::vector<Complex> poly;  // increasing degree
  Wavepacket base;

  explicit PolyWavepacket(Wavepacket h) : poly{1.0}, base(h) {}
  PolyWavepacket(std::vector<Complex> p, Wavepacket h) : poly(std::move(p)), base(h) {}

  Complex operator()(double u) const;
  PolyWavepacket& operator-=(const PolyWavepacket& o);
};

// Symbols iξ, i(λu²/2 − μ/(2λ)), −iλu, iλ for generators 1..4.
KNSymbol infinitesimal_symbol(const RepParams& p, int generator);

struct InfinitesimalImage {
  KNSymbol symbol;
  GridOperator op;
};

// d/dt pi(t e_i) at t = 0, as a symbol and its quantization.
InfinitesimalImage pi_infinitesimal(const RepParams& p, int generator, const Grid1D& grid);

// Exact action of d pi(X_i) on polynomial wavepackets.
PolyWavepacket pi_infinitesimal_apply(const RepParams& p, int generator, const PolyWavepacket& h);

// d^2/du^2 - (lambda u^2 - mu/lambda)^2 / 4.
GridOperator sublaplacian_image(const RepParams& p, const Grid1D& grid);

// (I - pi(L))^s.
GridOperator i_minus_L_power(const RepParams& p, const Grid1D& grid, double s);

}  // namespace engel
