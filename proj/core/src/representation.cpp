#include "engel/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace engel {

RepParams::RepParams(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
  if (lambda_ == 0.0 || !std::isfinite(lambda_)) throw std::invalid_argument("RepParams: lambda must be nonzero");
}

double representation_phase(const RepParams& p, const Point& x, double u) {
  const double l = p.lambda;
  return -p.mu * x.x2 / (2.0 * l) + l * x.x4 - l * x.x3 * u + 0.5 * l * x.x2 * u * u;
}

Wavepacket pi_apply(const RepParams& p, const Point& x, const Wavepacket& h) {
  const double l = p.lambda;
  const Complex i(0.0, 1.0);
  const Complex a = h.a(), b = h.b(), c = h.c();
  return {a + i * (0.5 * l * x.x2), b + 2.0 * a * x.x1 - i * (l * x.x3),
          c + (a * x.x1 + b) * x.x1 + i * (-p.mu * x.x2 / (2.0 * l) + l * x.x4)};
}

GridOperator pi_grid(const RepParams& p, const Point& x, const Grid1D& grid) {
  if (std::abs(x.x1) > 0.5 * grid.half_width())
    throw std::invalid_argument("pi_grid: |x1| exceeds half the grid half-width");
  const double s = x.x1;
  const ComplexMatrix shift = grid.fourier_multiplier([s](double k) { return std::polar(1.0, k * s); });
  ComplexVector phase(grid.size());
  for (int j = 0; j < grid.size(); ++j) phase(j) = std::polar(1.0, representation_phase(p, x, grid.point(j)));
  return {grid, phase.asDiagonal() * shift};
}

Complex PolyWavepacket::operator()(double u) const {
  Complex sum = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) sum = sum * u + *it;
  return sum * base(u);
}

PolyWavepacket& PolyWavepacket::operator-=(const PolyWavepacket& o) {
  if (o.base.a() != base.a() || o.base.b() != base.b() || o.base.c() != base.c())
    throw std::invalid_argument("PolyWavepacket: different base wavepackets");
  if (poly.size() < o.poly.size()) poly.resize(o.poly.size(), 0.0);
  for (std::size_t k = 0; k < o.poly.size(); ++k) poly[k] -= o.poly[k];
  return *this;
}

KNSymbol infinitesimal_symbol(const RepParams& p, int generator) {
  const Complex i(0.0, 1.0);
  const double l = p.lambda, mu = p.mu;
  switch (generator) {
    case 1:
      return KNSymbol::polynomial_in_frequency({[](double) { return Complex(0.0); }, [i](double) { return i; }});
    case 2:
      return KNSymbol::position_only([=](double u) { return i * (0.5 * l * u * u - mu / (2.0 * l)); });
    case 3:
      return KNSymbol::position_only([=](double u) { return -i * l * u; });
    case 4:
      return KNSymbol::constant(i * l);
    default:
      throw std::invalid_argument("infinitesimal_symbol: generator index must be 1..4");
  }
}

InfinitesimalImage pi_infinitesimal(const RepParams& p, int generator, const Grid1D& grid) {
  KNSymbol s = infinitesimal_symbol(p, generator);
  GridOperator op = kn_quantize(s, grid);
  return {std::move(s), std::move(op)};
}

PolyWavepacket pi_infinitesimal_apply(const RepParams& p, int generator, const PolyWavepacket& h) {
  const Complex i(0.0, 1.0);
  const double l = p.lambda;
  std::vector<Complex> out;
  const auto& q = h.poly;
  switch (generator) {
    case 1: {
      // (q h)' = (q' + q (2 a u + b)) h
      out.assign(q.size() + 1, 0.0);
      for (std::size_t k = 1; k < q.size(); ++k) out[k - 1] += static_cast<double>(k) * q[k];
      for (std::size_t k = 0; k < q.size(); ++k) {
        out[k] += h.base.b() * q[k];
        out[k + 1] += 2.0 * h.base.a() * q[k];
      }
      break;
    }
    case 2: {
      out.assign(q.size() + 2, 0.0);
      for (std::size_t k = 0; k < q.size(); ++k) {
        out[k] += -i * (p.mu / (2.0 * l)) * q[k];
        out[k + 2] += i * (0.5 * l) * q[k];
      }
      break;
    }
    case 3: {
      out.assign(q.size() + 1, 0.0);
      for (std::size_t k = 0; k < q.size(); ++k) out[k + 1] += -i * l * q[k];
      break;
    }
    case 4: {
      out = q;
      for (auto& c : out) c *= i * l;
      break;
    }
    default:
      throw std::invalid_argument("pi_infinitesimal_apply: generator index must be 1..4");
  }
  return {std::move(out), h.base};
}

GridOperator sublaplacian_image(const RepParams& p, const Grid1D& grid) {
  const double l = p.lambda, mu = p.mu;
  GridOperator second = GridOperator::fourier_multiplier(grid, [](double k) { return Complex(-k * k, 0.0); });
  GridOperator potential = GridOperator::multiplication(grid, [=](double u) {
    const double w = l * u * u - mu / l;
    return Complex(0.25 * w * w, 0.0);
  });
  return second - potential;
}

GridOperator i_minus_L_power(const RepParams& p, const Grid1D& grid, double s) {
  return fractional_power(GridOperator::identity(grid) - sublaplacian_image(p, grid), s);
}

}  // namespace engel
