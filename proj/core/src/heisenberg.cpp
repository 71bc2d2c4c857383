#include "engel/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "engel/wavepacket.hpp"

namespace engel {

PhaseFunction renormalize(const LambdaSymbol& a) {
  if (a.lambda == 0.0) throw std::invalid_argument("lambda must be nonzero");
  if (a.lambda < 0.0) throw std::domain_error("renormalisation needs sqrt(lambda); lambda < 0 is not supported");
  const double r = std::sqrt(a.lambda);
  return [f = a.a, r](double p, double q) { return f(p / r, q / r); };
}

LambdaSymbol unrenormalize(const PhaseFunction& renormalized, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("renormalisation needs lambda > 0");
  const double r = std::sqrt(lambda);
  return {[g = renormalized, r](double xi, double u) { return g(r * xi, r * u); }, lambda};
}

KNSymbol dilate_symbol(const KNSymbol& a, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dilation factor must be positive");
  if (a.polynomial) {
    std::vector<KNSymbol::Coefficient> coeffs;
    double scale = 1.0;
    for (const auto& c : *a.polynomial) {
      coeffs.push_back([c, s, scale](double u) { return scale * c(s * u); });
      scale /= s;
    }
    return KNSymbol::polynomial_in_frequency(std::move(coeffs));
  }
  return KNSymbol::from_function([f = a.value, s](double u, double xi) { return f(s * u, xi / s); });
}

double dilation_residual(const KNSymbol& a, const Grid1D& grid, double s, const XiQuadrature& xi) {
  const GridOperator op = weyl_quantize(a, grid, xi);
  const GridOperator op_s = weyl_quantize(dilate_symbol(a, s), grid, xi);
  const double window = 0.5 * grid.half_width();
  const std::vector<Wavepacket> probes{Wavepacket::gaussian(0.5, 0.0, 0.0), Wavepacket::gaussian(0.4, 0.3, 1.1),
                                       Wavepacket::gaussian(0.6, -0.2, -0.7)};
  double num = 0.0, den = 0.0;
  for (const auto& f : probes) {
    const ComplexVector image = op.apply(grid.sample([&](double u) { return f(u); }));
    const ComplexVector image_s = op_s.apply(grid.sample([&](double u) { return std::sqrt(s) * f(s * u); }));
    for (int k = 0; k < grid.size(); ++k) {
      const double u = grid.point(k);
      if (std::abs(u) > window) continue;
      const Complex lhs = std::sqrt(s) * grid.interpolate(image, s * u);
      num += std::norm(lhs - image_s(k));
      den += std::norm(lhs);
    }
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

WeylReport weyl_roundtrip_check(const KNSymbol& a, const Grid1D& grid, const WeylCheckOptions& opt) {
  WeylReport r;
  double imag = 0.0, scale = 0.0;
  for (double u : opt.real_samples)
    for (double xi : opt.real_samples) {
      const Complex v = a(u, xi);
      imag = std::max(imag, std::abs(v.imag()));
      scale = std::max(scale, std::abs(v));
    }
  r.real_symbol = imag <= 1e-14 * std::max(1.0, scale);
  const GridOperator op = weyl_quantize(a, grid, opt.xi);
  r.hermitian_defect = hermitian_defect(op);
  const Eigen::VectorXd ev = hermitian_eigenvalues(op);
  const int count = std::min<int>(opt.eigenvalue_count, static_cast<int>(ev.size()));
  r.lowest_eigenvalues.assign(ev.data(), ev.data() + count);
  for (double s : opt.scales) {
    r.scales.push_back(s);
    r.dilation_residuals.push_back(dilation_residual(a, grid, s, opt.xi));
  }
  return r;
}

KNSymbol harmonic_oscillator_symbol() {
  return KNSymbol::polynomial_in_frequency({[](double u) { return Complex(u * u); }, [](double) { return Complex(0.0); },
                                            [](double) { return Complex(1.0); }});
}

}  // namespace engel
