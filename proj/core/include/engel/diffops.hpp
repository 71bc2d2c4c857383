#pragma once

#include <string>
#include <vector>

#include "engel/fields.hpp"
#include "engel/gft.hpp"

namespace engel {

struct DeltaOptions {
  XiQuadrature xi;
  double mu_step = 0.05;      // central-difference step in mu
  double lambda_step = 0.02;  // central-difference step in lambda
  int richardson_levels = 1;  // extra halvings combined by Richardson extrapolation
};

// pi(f) on the grid.
GridOperator group_fourier(const TestFunction4& f, const RepParams& p, const Grid1D& grid, const XiQuadrature& xi = {});

// pi(x^alpha kappa); the coordinate-multiplied kernel stays in closed form.
GridOperator delta_direct(const Exponent& alpha, const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                          const XiQuadrature& xi = {});
// pi(x_i kappa), i in 1..4.
GridOperator delta_direct(int i, const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                          const XiQuadrature& xi = {});

// (i/lambda) (pi(X3) pi(kappa) - pi(kappa) pi(X3)).
GridOperator delta_x1_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt = {});

// Central difference in mu at a single step, without extrapolation.
GridOperator mu_derivative(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid, double step,
                           const XiQuadrature& xi = {});
GridOperator lambda_derivative(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid, double step,
                               const XiQuadrature& xi = {});

// (2 lambda / i) d/dmu pi(kappa), extrapolated.
GridOperator delta_x2_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt = {});

// (i/lambda) (Delta_x2 pi(kappa) pi(X3) + pi(kappa) pi(X1) - pi(X1) pi(kappa)).
GridOperator delta_x3_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt = {});

enum class DeltaPath {
  Mixed,  // Delta_x2, Delta_x3 from their formulas, iterated terms direct
  Exact,  // every Delta term from delta_direct
};

// i d/dlambda pi(kappa) - (mu/(2 lambda^2) + u^2/2) Delta_x2 + u Delta_x3 - Delta_x3 Delta_x1
//   + u Delta_x2 Delta_x1 - 1/2 Delta_x2 Delta_x1^2, with u acting by left multiplication.
GridOperator delta_x4_formula(const TestFunction4& kappa, const RepParams& p, const Grid1D& grid,
                              const DeltaOptions& opt = {}, DeltaPath path = DeltaPath::Mixed);

// Polynomial-in-u multiplication operator c0 + c1 u + c2 u^2 (how the published
// table entries are written).
struct MultiplierClaim {
  std::string text;
  Complex c0 = 0.0, c1 = 0.0, c2 = 0.0;
  Complex operator()(double u) const { return c0 + (c1 + c2 * u) * u; }
};

struct DeltaTableCell {
  int i = 0;  // difference operator index
  int j = 0;  // generator index
  std::vector<MultiplierClaim> published;
  double leibniz = 0.0;  // the entry is leibniz * I
  // Narrow-Gaussian limit, as samples of (Delta pi(X_j) h)(u) / h(u).
  std::vector<double> sample_points;
  std::vector<Complex> numeric_ratio;
  double numeric_vs_leibniz = 0.0;                // max |numeric - leibniz| over samples
  std::vector<double> numeric_vs_published;       // same for each published claim
  std::vector<double> extrapolation_change;        // |last Richardson step| per sample, max
  bool published_matches_leibniz = false;
  std::string status;  // "agree" or "conflict"
};

struct DeltaTableOptions {
  RepParams params{2.0, 1.0};
  std::vector<double> widths{0.2, 0.1, 0.05};
  std::vector<double> sample_points{-0.5, 0.0, 0.4};
  Wavepacket probe = Wavepacket::gaussian(1.0, 0.1, 0.3);
  double match_tolerance = 1e-3;
};

// The published Delta_{x_i} pi(X_j) table at (lambda, mu).
std::vector<MultiplierClaim> published_delta_entry(int i, int j, const RepParams& p);

// Value of Delta_{x_i} pi(X_j) predicted by the product rule: -(X_j x_i)(0) I.
double leibniz_delta_entry(int i, int j);

// Applies pi(x_i X_j delta_eps) to the probe for each width and extrapolates in
// eps^2 to eps = 0.
std::vector<DeltaTableCell> delta_table(const DeltaTableOptions& opt = {});

}  // namespace engel
