#include "engel/diffops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace engel {

namespace {

const Complex kI(0.0, 1.0);

void require_lambda(const RepParams& p, double min_abs = 0.0) {
  if (std::abs(p.lambda) <= min_abs) throw std::invalid_argument("difference operator: lambda too close to zero");
}

GridOperator extrapolate(std::vector<GridOperator> levels) {
  // levels[k] uses step h / 2^k; error expansion in h^2.
  double factor = 4.0;
  while (levels.size() > 1) {
    std::vector<GridOperator> next;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k)
      next.push_back(Complex(1.0 / (factor - 1.0)) * (Complex(factor) * levels[k + 1] - levels[k]));
    levels = std::move(next);
    factor *= 4.0;
  }
  return levels.front();
}

GridOperator multiplier(const Grid1D& grid, std::function<Complex(double)> g) {
  return GridOperator::multiplication(grid, g);
}

GridOperator x3_from_parts(const GridOperator& d2, const GridOperator& pik, const RepParams& p, const Grid1D& grid) {
  const GridOperator x1 = pi_infinitesimal(p, 1, grid).op;
  const GridOperator x3 = pi_infinitesimal(p, 3, grid).op;
  return Complex(kI / p.lambda) * (d2 * x3 + pik * x1 - x1 * pik);
}

}  // namespace

GridOperator group_fourier(const TestFunction4& f, const RepParams& p, const Grid1D& grid, const XiQuadrature& xi) {
  return gft_via_symbol(f, p, grid, xi);
}

GridOperator delta_direct(const Exponent& alpha, const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                          const XiQuadrature& xi) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("delta_direct: negative multi-index");
  if (alpha[0] + alpha[1] + alpha[2] + alpha[3] + kappa.max_degree() > 12)
    throw std::invalid_argument("delta_direct: polynomial prefactor degree exceeds 12");
  return group_fourier(kappa.times_monomial(alpha), p, grid, xi);
}

GridOperator delta_direct(int i, const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                          const XiQuadrature& xi) {
  if (i < 1 || i > 4) throw std::invalid_argument("delta_direct: index must be 1..4");
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i - 1)] = 1;
  return delta_direct(e, kappa, p, grid, xi);
}

GridOperator delta_x1_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt) {
  require_lambda(p);
  const GridOperator pik = group_fourier(kappa, p, grid, opt.xi);
  const GridOperator x3 = pi_infinitesimal(p, 3, grid).op;
  return Complex(kI / p.lambda) * (x3 * pik - pik * x3);
}

GridOperator mu_derivative(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid, double step,
                           const XiQuadrature& xi) {
  const GridOperator plus = group_fourier(kappa, RepParams(p.lambda, p.mu + step), grid, xi);
  const GridOperator minus = group_fourier(kappa, RepParams(p.lambda, p.mu - step), grid, xi);
  return Complex(0.5 / step) * (plus - minus);
}

GridOperator lambda_derivative(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid, double step,
                               const XiQuadrature& xi) {
  if (std::abs(p.lambda) <= 2.0 * step) throw std::invalid_argument("lambda_derivative: step crosses lambda = 0");
  const GridOperator plus = group_fourier(kappa, RepParams(p.lambda + step, p.mu), grid, xi);
  const GridOperator minus = group_fourier(kappa, RepParams(p.lambda - step, p.mu), grid, xi);
  return Complex(0.5 / step) * (plus - minus);
}

GridOperator delta_x2_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt) {
  require_lambda(p);
  std::vector<GridOperator> levels;
  double step = opt.mu_step;
  for (int k = 0; k <= opt.richardson_levels; ++k, step *= 0.5)
    levels.push_back(mu_derivative(kappa, p, grid, step, opt.xi));
  return Complex(2.0 * p.lambda / kI) * extrapolate(std::move(levels));
}

GridOperator delta_x3_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt) {
  require_lambda(p);
  return x3_from_parts(delta_x2_formula(kappa, p, grid, opt), group_fourier(kappa, p, grid, opt.xi), p, grid);
}

GridOperator delta_x4_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt, DeltaPath path) {
  require_lambda(p, 1e-3);
  std::vector<GridOperator> levels;
  double step = opt.lambda_step;
  for (int k = 0; k <= opt.richardson_levels; ++k, step *= 0.5)
    levels.push_back(lambda_derivative(kappa, p, grid, step, opt.xi));
  const GridOperator dlambda = extrapolate(std::move(levels));

  GridOperator d2 = GridOperator::zero(grid), d3 = GridOperator::zero(grid);
  if (path == DeltaPath::Exact) {
    d2 = delta_direct(2, kappa, p, grid, opt.xi);
    d3 = delta_direct(3, kappa, p, grid, opt.xi);
  } else {
    d2 = delta_x2_formula(kappa, p, grid, opt);
    d3 = x3_from_parts(d2, group_fourier(kappa, p, grid, opt.xi), p, grid);
  }
  const GridOperator d31 = delta_direct({1, 0, 1, 0}, kappa, p, grid, opt.xi);
  const GridOperator d21 = delta_direct({1, 1, 0, 0}, kappa, p, grid, opt.xi);
  const GridOperator d211 = delta_direct({2, 1, 0, 0}, kappa, p, grid, opt.xi);

  const double l = p.lambda, mu = p.mu;
  const GridOperator u = multiplier(grid, [](double x) { return Complex(x); });
  const GridOperator weight = multiplier(grid, [=](double x) { return Complex(mu / (2.0 * l * l) + 0.5 * x * x); });
  return kI * dlambda - weight * d2 + u * d3 - d31 + u * d21 - Complex(0.5) * d211;
}

std::vector<MultiplierClaim> published_delta_entry(int i, int j, const RepParams& p) {
  const double l = p.lambda, mu = p.mu;
  auto identity = [](double c, const char* text) { return MultiplierClaim{text, c, 0.0, 0.0}; };
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::invalid_argument("published_delta_entry: indices must be 1..4");
  switch (i) {
    case 1:
      return {j == 1 ? identity(-1.0, "-I") : identity(0.0, "0")};
    case 2:
      return {j == 2 ? MultiplierClaim{"-lambda I", -l, 0.0, 0.0} : identity(0.0, "0")};
    case 3:
      if (j == 2) return {MultiplierClaim{"-lambda u + u", 0.0, 1.0 - l, 0.0}};
      if (j == 3) return {identity(-1.0, "-I")};
      return {identity(0.0, "0")};
    default:
      if (j == 2) return {MultiplierClaim{"u^2/2 (1 - lambda) + mu/(2 lambda)", mu / (2.0 * l), 0.0, 0.5 * (1.0 - l)}};
      if (j == 4) return {identity(0.0, "0"), identity(-1.0, "-I")};
      if (j == 3) return {};
      return {identity(0.0, "0")};
  }
}

double leibniz_delta_entry(int i, int j) {
  // x_i X_j delta_0 = X_j(x_i delta_0) - (X_j x_i) delta_0 and x_i delta_0 = 0.
  const auto gens = left_invariant_generators();
  const Poly4 coefficient = gens[static_cast<std::size_t>(j - 1)].first_order_coefficients()[static_cast<std::size_t>(i - 1)];
  return 0.0 - coefficient.evaluate<double>({0.0, 0.0, 0.0, 0.0});
}

std::vector<DeltaTableCell> delta_table(const DeltaTableOptions& opt) {
  const auto gens = left_invariant_generators();
  std::vector<DeltaTableCell> table;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      DeltaTableCell cell;
      cell.i = i;
      cell.j = j;
      cell.published = published_delta_entry(i, j, opt.params);
      cell.leibniz = leibniz_delta_entry(i, j);
      cell.sample_points = opt.sample_points;

      Exponent e{0, 0, 0, 0};
      e[static_cast<std::size_t>(i - 1)] = 1;
      std::vector<std::vector<Complex>> values;  // [width][sample]
      for (double eps : opt.widths) {
        const TestFunction4 kernel =
            TestFunction4::delta_approximant(eps).apply(gens[static_cast<std::size_t>(j - 1)]).times_monomial(e);
        std::vector<Complex> row;
        for (double u : opt.sample_points) row.push_back(gft_direct(kernel, opt.params, opt.probe, u) / opt.probe(u));
        values.push_back(std::move(row));
      }
      // Richardson in eps^2 with the actual width ratios.
      std::vector<double> eps2;
      for (double eps : opt.widths) eps2.push_back(eps * eps);
      double last_change = 0.0;
      for (std::size_t level = 1; level < values.size(); ++level) {
        std::vector<std::vector<Complex>> next;
        for (std::size_t k = 0; k + 1 < values.size(); ++k) {
          const double a = eps2[k], b = eps2[k + level];
          std::vector<Complex> row;
          for (std::size_t s = 0; s < values[k].size(); ++s) {
            const Complex v = (a * values[k + 1][s] - b * values[k][s]) / (a - b);
            row.push_back(v);
          }
          next.push_back(std::move(row));
        }
        last_change = 0.0;
        for (std::size_t s = 0; s < next.back().size(); ++s)
          last_change = std::max(last_change, std::abs(next.back()[s] - values.back()[s]));
        values = std::move(next);
      }
      cell.numeric_ratio = values.back();
      cell.extrapolation_change = {last_change};

      for (const Complex& v : cell.numeric_ratio)
        cell.numeric_vs_leibniz = std::max(cell.numeric_vs_leibniz, std::abs(v - cell.leibniz));
      bool published_ok = !cell.published.empty();
      for (const auto& claim : cell.published) {
        double dev = 0.0;
        double vs_leibniz = 0.0;
        for (std::size_t s = 0; s < cell.numeric_ratio.size(); ++s) {
          const double u = cell.sample_points[s];
          dev = std::max(dev, std::abs(cell.numeric_ratio[s] - claim(u)));
          vs_leibniz = std::max(vs_leibniz, std::abs(claim(u) - cell.leibniz));
        }
        cell.numeric_vs_published.push_back(dev);
        if (vs_leibniz > opt.match_tolerance) published_ok = false;
      }
      cell.published_matches_leibniz = published_ok;
      if (cell.published.empty()) {
        cell.status = "missing: no published entry";
      } else if (published_ok && cell.numeric_vs_leibniz <= opt.match_tolerance) {
        cell.status = "agree";
      } else {
        cell.status = "conflict";
      }
      table.push_back(std::move(cell));
    }
  }
  return table;
}

}  // namespace engel
