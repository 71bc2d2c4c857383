#include "engel/quantization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "engel/error.hpp"
#include "engel/quadrature.hpp"

namespace engel {

KNSymbol KNSymbol::from_function(Function f) { return {std::move(f), std::nullopt}; }

KNSymbol KNSymbol::polynomial_in_frequency(std::vector<Coefficient> coefficients) {
  KNSymbol s;
  s.value = [coefficients](double v, double xi) {
    Complex sum = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * xi + (*it)(v);
    return sum;
  };
  s.polynomial = std::move(coefficients);
  return s;
}

KNSymbol KNSymbol::constant(Complex c) {
  return polynomial_in_frequency({[c](double) { return c; }});
}

KNSymbol KNSymbol::position_only(Coefficient g) { return polynomial_in_frequency({std::move(g)}); }

GridOperator frequency_operator(const Grid1D& grid, int power) {
  if (power < 0) throw std::invalid_argument("frequency_operator: negative power");
  if (power == 0) return GridOperator::identity(grid);
  return GridOperator::fourier_multiplier(grid, [power](double k) { return Complex(std::pow(k, power), 0.0); });
}

namespace {

struct XiNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
};

XiNodes xi_nodes(const Grid1D& grid, const XiQuadrature& xi) {
  const double cutoff = xi.cutoff > 0.0 ? xi.cutoff : grid.nyquist();
  const int panels = xi.panels > 0 ? xi.panels : grid.size() / 2;
  const auto& rule = gauss_legendre(xi.order);
  XiNodes out;
  const double width = 2.0 * cutoff / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = -cutoff + (p + 0.5) * width;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      out.nodes.push_back(mid + 0.5 * width * rule.nodes[q]);
      out.weights.push_back(0.5 * width * rule.weights[q]);
    }
  }
  return out;
}

void check_decay(const KNSymbol& a, const std::vector<double>& positions, double cutoff, double peak, double tol) {
  double edge = 0.0;
  for (double v : positions) edge = std::max({edge, std::abs(a(v, cutoff)), std::abs(a(v, -cutoff))});
  if (edge > tol * peak) {
    std::ostringstream os;
    os << "quantize: symbol has no closed form and does not decay at the frequency cutoff (|a| = " << edge
       << " vs peak " << peak << ")";
    throw NumericalFailure(os.str());
  }
}

std::vector<double> grid_points(const Grid1D& grid) {
  std::vector<double> v(static_cast<std::size_t>(grid.size()));
  for (int k = 0; k < grid.size(); ++k) v[static_cast<std::size_t>(k)] = grid.point(k);
  return v;
}

}  // namespace

GridOperator kn_quantize(const KNSymbol& a, const Grid1D& grid, const XiQuadrature& xi) {
  const int n = grid.size();
  if (a.polynomial) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const auto& coeffs = *a.polynomial;
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      const ComplexVector c = grid.sample(coeffs[p]);
      m += frequency_operator(grid, static_cast<int>(p)).matrix() * c.asDiagonal();
    }
    return {grid, std::move(m)};
  }

  const XiNodes q = xi_nodes(grid, xi);
  const auto nq = static_cast<Eigen::Index>(q.nodes.size());
  ComplexMatrix e(n, nq), b(nq, n);
  double peak = 0.0;
  const double scale = grid.spacing() / (2.0 * std::numbers::pi);
  for (Eigen::Index s = 0; s < nq; ++s) {
    const double xis = q.nodes[static_cast<std::size_t>(s)];
    for (int j = 0; j < n; ++j) e(j, s) = std::polar(scale * q.weights[static_cast<std::size_t>(s)], grid.point(j) * xis);
    for (int k = 0; k < n; ++k) {
      const Complex val = a(grid.point(k), xis);
      peak = std::max(peak, std::abs(val));
      b(s, k) = std::polar(1.0, -grid.point(k) * xis) * val;
    }
  }
  check_decay(a, grid_points(grid), xi.cutoff > 0.0 ? xi.cutoff : grid.nyquist(), peak, xi.decay_tolerance);
  return {grid, e * b};
}

GridOperator weyl_quantize(const KNSymbol& a, const Grid1D& grid, const XiQuadrature& xi) {
  const int n = grid.size();
  if (a.polynomial) {
    // Op^W(c xi^p) = 2^{-p} sum_k C(p,k) D^k c D^{p-k}.
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const auto& coeffs = *a.polynomial;
    std::vector<ComplexMatrix> powers;
    for (std::size_t p = 0; p < coeffs.size(); ++p) powers.push_back(frequency_operator(grid, static_cast<int>(p)).matrix());
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      const ComplexVector c = grid.sample(coeffs[p]);
      double binom = 1.0;
      for (std::size_t k = 0; k <= p; ++k) {
        m += (binom / std::ldexp(1.0, static_cast<int>(p))) * (powers[k] * c.asDiagonal() * powers[p - k]);
        binom = binom * static_cast<double>(p - k) / static_cast<double>(k + 1);
      }
    }
    return {grid, std::move(m)};
  }

  const XiNodes q = xi_nodes(grid, xi);
  const auto nq = static_cast<Eigen::Index>(q.nodes.size());
  const double h = grid.spacing();
  const double scale = h / (2.0 * std::numbers::pi);
  // Symbol on the 2N-1 midpoints (u_j + u_k)/2 = -L + (j + k) h / 2.
  ComplexMatrix sym(2 * n - 1, nq);
  double peak = 0.0;
  std::vector<double> mids;
  for (int s = 0; s < 2 * n - 1; ++s) {
    const double mid = -grid.half_width() + 0.5 * s * h;
    mids.push_back(mid);
    for (Eigen::Index t = 0; t < nq; ++t) {
      sym(s, t) = a(mid, q.nodes[static_cast<std::size_t>(t)]) * q.weights[static_cast<std::size_t>(t)];
      peak = std::max(peak, std::abs(sym(s, t)) / q.weights[static_cast<std::size_t>(t)]);
    }
  }
  check_decay(a, mids, xi.cutoff > 0.0 ? xi.cutoff : grid.nyquist(), peak, xi.decay_tolerance);
  // Phase e^{i (j - k) h xi} indexed by d = j - k + n - 1.
  ComplexMatrix phase(2 * n - 1, nq);
  for (int d = 0; d < 2 * n - 1; ++d)
    for (Eigen::Index t = 0; t < nq; ++t)
      phase(d, t) = std::polar(1.0, (d - n + 1) * h * q.nodes[static_cast<std::size_t>(t)]);
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = scale * (phase.row(j - k + n - 1).transpose().cwiseProduct(sym.row(j + k).transpose())).sum();
  return {grid, std::move(m)};
}

}  // namespace engel
