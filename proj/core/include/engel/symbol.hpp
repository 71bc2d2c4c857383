#pragma once

// Operator-valued symbols sigma(x, lambda, mu), their S^m_{rho,delta}
// seminorms and the quantization Op(sigma).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "engel/diffops.hpp"
#include "engel/traces.hpp"

namespace engel {

// [alpha] = alpha1 + alpha2 + 2 alpha3 + 3 alpha4.
int homogeneous_degree(const Exponent& alpha);

// All multi-indices with homogeneous degree <= cap, ordered by degree then
// lexicographically.
std::vector<Exponent> multi_indices_up_to(int cap);

class SymbolField {
 public:
  enum class Kind { Identity, Kernel, Operator };
  using KernelFamily = std::function<TestFunction4(const Point& x)>;
  using OperatorFamily = std::function<GridOperator(const Point& x, const RepParams& p, const Grid1D& grid)>;

  // sigma = I for every (x, lambda, mu); exact, not a delta approximant.
  static SymbolField identity();
  // sigma(x, lambda, mu) = pi_{lambda,mu}(kappa_x).
  static SymbolField kernel_family(KernelFamily family, XiQuadrature xi = {});
  static SymbolField constant_kernel(const TestFunction4& kappa, XiQuadrature xi = {});
  static SymbolField operator_family(OperatorFamily family);

  Kind kind() const { return kind_; }
  bool has_kernel() const { return kind_ == Kind::Kernel; }
  TestFunction4 kernel_at(const Point& x) const;

  GridOperator operator()(const Point& x, const RepParams& p, const Grid1D& grid) const;

  // Delta'^alpha sigma(x, lambda, mu) = pi(y^alpha kappa_x).
  GridOperator delta(const Exponent& alpha, const Point& x, const RepParams& p, const Grid1D& grid) const;

 private:
  Kind kind_ = Kind::Identity;
  KernelFamily kernel_;
  OperatorFamily operator_;
  XiQuadrature xi_;
};

GridOperator delta_multi(const Exponent& alpha, const SymbolField& sigma, const Point& x, const RepParams& p,
                         const Grid1D& grid);

struct XDerivativeOptions {
  double step = 1e-3;
  bool richardson = true;
};

// X^beta applied in the x variable, X^beta = X1^b1 X2^b2 X3^b3 X4^b4, each
// left-invariant X_j realised as d/dt F(x o t e_j) by central differences.
GridOperator x_derivative(const std::function<GridOperator(const Point&)>& field, const Exponent& beta,
                          const Point& x, const XDerivativeOptions& opt = {});

struct SeminormSpec {
  double m = 0.0;
  double rho = 1.0;
  double delta = 0.0;
  int a = 0;  // cap on [alpha]
  int b = 0;  // cap on [beta]
  int c = 0;  // gamma = 0..c
  std::vector<Point> xs{Point::identity()};
  std::vector<RepParams> params{RepParams(1.0, 0.0)};
  XDerivativeOptions fd;

  void validate() const;
};

struct SeminormRow {
  Exponent alpha{};
  Exponent beta{};
  int gamma = 0;
  Point x;
  double lambda = 0.0;
  double mu = 0.0;
  double value = 0.0;
};

struct SeminormResult {
  // Maximum over the sampled set: a lower bound for the seminorm.
  double value = 0.0;
  SeminormRow witness;
  std::vector<SeminormRow> rows;
  double fd_step = 0.0;
};

// max over samples of
//   || (I - L)^{(rho[alpha] - m - delta[beta] + gamma)/2} X^beta Delta'^alpha sigma (I - L)^{-gamma/2} ||_op.
SeminormResult seminorm(const SymbolField& sigma, const SeminormSpec& spec, const Grid1D& grid);

std::string seminorm_csv(const SeminormResult& result);

struct QuantizeOptions {
  QuadratureSpec truncation;
  TraceOptions trace;
  // Only for operator-valued symbols: fixed rule over the core region.
  int grid_panels = 4;
  int grid_order = 8;
  double grid_mu_max = 0.0;  // 0: truncation.mu_max
};

struct QuantizeResult {
  Complex value = 0.0;
  LambdaMuIntegral integral;  // before the inversion constant
  bool grid_fallback = false;
  bool mu_closed_form = false;  // two-kernel traces: mu integrated exactly
  double tolerance = 1e-3;    // expected accuracy of the route used
};

// Op(sigma) phi(x) = c int int Tr(pi(x) sigma(x, lambda, mu) pi(phi)) dmu dlambda.
QuantizeResult quantize(const SymbolField& sigma, const TestFunction4& phi, const Point& x,
                        const QuantizeOptions& opt = {}, const std::optional<Grid1D>& grid = std::nullopt);

enum class TraceOrder { KernelFirst, TestFirst };

// c int int Tr(pi(kappa_x) pi(phi(x o .))) dmu dlambda; TestFirst swaps the factors.
QuantizeResult quantize_composed(const SymbolField& sigma, const TestFunction4& phi, const Point& x,
                                 const QuantizeOptions& opt = {}, TraceOrder order = TraceOrder::KernelFirst,
                                 const std::optional<Grid1D>& grid = std::nullopt);

}  // namespace engel
