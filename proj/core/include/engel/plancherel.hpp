#pragma once

#include <string>
#include <vector>

#include "engel/gft.hpp"

namespace engel {

// Truncation and tolerance settings for integrals over (lambda, mu).
struct QuadratureSpec {
  double lambda_min = 0.05;  // core region |lambda| in [lambda_min, lambda_max]
  double lambda_max = 8.0;
  double mu_max = 40.0;      // core region |mu| <= mu_max
  int panels = 4;            // initial lambda panels per side
  int order = 10;            // Gauss-Legendre points per panel
  double rel_tol = 1e-6;     // outer (lambda) tolerance
  double inner_rel_tol = 1e-8;
  double window_sigmas = 9.0;

  void validate() const;
  // key=value lines, one per field.
  std::string to_text() const;
  static QuadratureSpec from_text(const std::string& text);
};

// ||pi(f)||_HS^2 from the closed-form kernel: the x1 integral is exact and the
// remaining position integral adaptive.
double hs_norm_squared(const TestFunction4& f, const RepParams& p, double rel_tol = 1e-10, double sigmas = 9.0);

// Same quantity from the quantized grid operator.
double hs_norm_squared_grid(const TestFunction4& f, const RepParams& p, const Grid1D& grid);

// Conservative ranges of lambda and, for fixed lambda, of mu outside of which
// pi_{lambda,mu}(f) is negligible.
Interval lambda_support(const TestFunction4& f, double sigmas = 9.0);
Interval mu_support(const TestFunction4& f, double lambda, double sigmas = 9.0);

struct PlancherelPanel {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double core = 0.0;     // mu in [-M, M]
  double mu_tail = 0.0;  // mu outside [-M, M]
  double cumulative = 0.0;
};

struct PlancherelResult {
  double core = 0.0;         // lambda in +-[lambda_min, Lambda], |mu| <= M
  double mu_tail = 0.0;      // same lambda, |mu| > M
  double gap = 0.0;          // 0 < |lambda| < lambda_min
  double lambda_tail = 0.0;  // |lambda| > Lambda
  double total = 0.0;
  double norm_squared = 0.0;
  double ratio = 0.0;       // total / ||f||^2
  double core_ratio = 0.0;  // core / ||f||^2
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
  std::vector<PlancherelPanel> panels;
};

// R(f) = int int ||pi_{lambda,mu}(f)||_HS^2 d mu d lambda / ||f||^2.
PlancherelResult plancherel_ratio(const TestFunction4& f, const QuadratureSpec& spec = {});

// Value predicted by the change of variables: (2 pi)^3 / |det| = 16 pi^3.
double predicted_plancherel_ratio();
// Constant c with f(x) = c int int Tr(pi(x) pi(f)) d mu d lambda.
double inversion_constant();

struct ConstantVerdict {
  double measured = 0.0;
  double stated_value = 0.0;   // 2^3 pi^4
  double derived_value = 0.0;  // 2^2 pi^3
  double predicted = 0.0;      // 16 pi^3
  double stated_deviation = 0.0;
  double derived_deviation = 0.0;
  double predicted_deviation = 0.0;
  std::string status;  // "flag: adjudicated (...)" or "flag: novel value"
};

// Compares a measured ratio with the two published candidates; a match within
// `match_tolerance` relative error adjudicates, otherwise a novel value.
ConstantVerdict adjudicate_plancherel_constant(double measured, double match_tolerance = 0.02);

}  // namespace engel
