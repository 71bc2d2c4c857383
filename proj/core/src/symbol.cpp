#include "engel/symbol.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "engel/error.hpp"

namespace engel {

int homogeneous_degree(const Exponent& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
  return alpha[0] + alpha[1] + 2 * alpha[2] + 3 * alpha[3];
}

std::vector<Exponent> multi_indices_up_to(int cap) {
  std::vector<Exponent> out;
  for (int d = 0; d <= cap; ++d)
    for (int a1 = 0; a1 <= d; ++a1)
      for (int a2 = 0; a1 + a2 <= d; ++a2)
        for (int a3 = 0; a1 + a2 + 2 * a3 <= d; ++a3) {
          const int rest = d - a1 - a2 - 2 * a3;
          if (rest % 3 == 0) out.push_back({a1, a2, a3, rest / 3});
        }
  return out;
}

namespace {

bool is_zero(const Exponent& e) { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

}  // namespace

SymbolField SymbolField::identity() { return SymbolField(); }

SymbolField SymbolField::kernel_family(KernelFamily family, XiQuadrature xi) {
  SymbolField s;
  s.kind_ = Kind::Kernel;
  s.kernel_ = std::move(family);
  s.xi_ = xi;
  return s;
}

SymbolField SymbolField::constant_kernel(const TestFunction4& kappa, XiQuadrature xi) {
  return kernel_family([kappa](const Point&) { return kappa; }, xi);
}

SymbolField SymbolField::operator_family(OperatorFamily family) {
  SymbolField s;
  s.kind_ = Kind::Operator;
  s.operator_ = std::move(family);
  return s;
}

TestFunction4 SymbolField::kernel_at(const Point& x) const {
  if (kind_ != Kind::Kernel) throw std::logic_error("symbol field has no kernel family");
  return kernel_(x);
}

GridOperator SymbolField::operator()(const Point& x, const RepParams& p, const Grid1D& grid) const {
  switch (kind_) {
    case Kind::Identity:
      return GridOperator::identity(grid);
    case Kind::Kernel:
      return group_fourier(kernel_(x), p, grid, xi_);
    case Kind::Operator:
      break;
  }
  return operator_(x, p, grid);
}

GridOperator SymbolField::delta(const Exponent& alpha, const Point& x, const RepParams& p, const Grid1D& grid) const {
  if (is_zero(alpha)) return (*this)(x, p, grid);
  switch (kind_) {
    case Kind::Identity:
      // I = pi(delta) and y^alpha delta = 0.
      return GridOperator::zero(grid);
    case Kind::Kernel:
      return delta_direct(alpha, kernel_(x), p, grid, xi_);
    case Kind::Operator:
      break;
  }
  throw std::invalid_argument("difference operators need a kernel family");
}

GridOperator delta_multi(const Exponent& alpha, const SymbolField& sigma, const Point& x, const RepParams& p,
                         const Grid1D& grid) {
  return sigma.delta(alpha, x, p, grid);
}

namespace {

GridOperator derive(const std::function<GridOperator(const Point&)>& field, const std::vector<int>& seq,
                    std::size_t k, const Point& x, const XDerivativeOptions& opt) {
  if (k == seq.size()) return field(x);
  const int j = seq[k];
  auto central = [&](double h) {
    const GridOperator plus = derive(field, seq, k + 1, multiply(x, axis_point(j - 1, h)), opt);
    const GridOperator minus = derive(field, seq, k + 1, multiply(x, axis_point(j - 1, -h)), opt);
    return Complex(1.0 / (2.0 * h)) * (plus - minus);
  };
  const GridOperator coarse = central(opt.step);
  if (!opt.richardson) return coarse;
  const GridOperator fine = central(0.5 * opt.step);
  return Complex(4.0 / 3.0) * fine - Complex(1.0 / 3.0) * coarse;
}

}  // namespace

GridOperator x_derivative(const std::function<GridOperator(const Point&)>& field, const Exponent& beta,
                          const Point& x, const XDerivativeOptions& opt) {
  if (!(opt.step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<int> seq;
  for (int j = 1; j <= 4; ++j) {
    if (beta[static_cast<std::size_t>(j - 1)] < 0) throw std::invalid_argument("negative multi-index entry");
    for (int r = 0; r < beta[static_cast<std::size_t>(j - 1)]; ++r) seq.push_back(j);
  }
  return derive(field, seq, 0, x, opt);
}

void SeminormSpec::validate() const {
  if (!(0.0 <= delta && delta < rho && rho <= 1.0)) throw std::invalid_argument("need 0 <= delta < rho <= 1");
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("caps must be nonnegative");
  if (xs.empty() || params.empty()) throw std::invalid_argument("sample sets must be nonempty");
  if (!(fd.step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

namespace {

// Powers of A = I - pi(L) from one eigendecomposition.
class SpectralPowers {
 public:
  SpectralPowers(const RepParams& p, const Grid1D& grid) : grid_(grid) {
    const GridOperator a = GridOperator::identity(grid) - sublaplacian_image(p, grid);
    const FractionalPowerOptions checks;
    if (hermitian_defect(a) > checks.hermitian_tolerance)
      throw NumericalFailure("I - pi(L) is not Hermitian on the grid");
    const ComplexMatrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
    if (eig.info() != Eigen::Success) throw NumericalFailure("eigendecomposition of I - pi(L) failed");
    values_ = eig.eigenvalues();
    vectors_ = eig.eigenvectors();
    if (values_.minCoeff() <= checks.relative_floor * values_.cwiseAbs().maxCoeff()) {
      std::ostringstream msg;
      msg << "I - pi(L) not positive on the grid, min eigenvalue " << values_.minCoeff();
      throw NumericalFailure(msg.str());
    }
  }

  const GridOperator& power(double s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const Eigen::VectorXd d = values_.array().pow(s).matrix();
    ComplexMatrix m = vectors_ * d.cast<Complex>().asDiagonal() * vectors_.adjoint();
    return cache_.emplace(s, GridOperator(grid_, std::move(m))).first->second;
  }

 private:
  Grid1D grid_;
  Eigen::VectorXd values_;
  ComplexMatrix vectors_;
  std::map<double, GridOperator> cache_;
};

}  // namespace

SeminormResult seminorm(const SymbolField& sigma, const SeminormSpec& spec, const Grid1D& grid) {
  spec.validate();
  SeminormResult res;
  res.fd_step = spec.fd.step;
  const auto alphas = multi_indices_up_to(spec.a);
  const auto betas = multi_indices_up_to(spec.b);
  bool first = true;
  for (const RepParams& p : spec.params) {
    SpectralPowers powers(p, grid);
    for (const Point& x : spec.xs) {
      for (const Exponent& alpha : alphas) {
        for (const Exponent& beta : betas) {
          GridOperator core = GridOperator::zero(grid);
          const bool vanishes = sigma.kind() == SymbolField::Kind::Identity && !(is_zero(alpha) && is_zero(beta));
          if (!vanishes) {
            if (is_zero(beta)) {
              core = sigma.delta(alpha, x, p, grid);
            } else {
              auto field = [&](const Point& y) { return sigma.delta(alpha, y, p, grid); };
              core = x_derivative(field, beta, x, spec.fd);
            }
          }
          for (int gamma = 0; gamma <= spec.c; ++gamma) {
            const double left = spec.rho * homogeneous_degree(alpha) - spec.m -
                                spec.delta * homogeneous_degree(beta) + gamma;
            const GridOperator weighted = powers.power(0.5 * left) * core * powers.power(-0.5 * gamma);
            SeminormRow row{alpha, beta, gamma, x, p.lambda, p.mu, operator_norm(weighted)};
            if (first || row.value > res.value) {
              res.value = row.value;
              res.witness = row;
              first = false;
            }
            res.rows.push_back(row);
          }
        }
      }
    }
  }
  return res;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string seminorm_csv(const SeminormResult& result) {
  std::string out = "alpha1,alpha2,alpha3,alpha4,beta1,beta2,beta3,beta4,gamma,x1,x2,x3,x4,lambda,mu,value\r\n";
  for (const auto& r : result.rows) {
    for (int a : r.alpha) out += std::to_string(a) + ",";
    for (int b : r.beta) out += std::to_string(b) + ",";
    out += std::to_string(r.gamma) + ",";
    out += num(r.x.x1) + "," + num(r.x.x2) + "," + num(r.x.x3) + "," + num(r.x.x4) + ",";
    out += num(r.lambda) + "," + num(r.mu) + "," + num(r.value) + "\r\n";
  }
  return out;
}

namespace {

Interval intersect_one_or_empty(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Fixed Gauss-Legendre rule over the core region for operator-valued data.
QuantizeResult grid_route(const std::function<Complex(const RepParams&)>& trace, const TestFunction4& phi,
                          const QuantizeOptions& opt) {
  const QuadratureSpec& spec = opt.truncation;
  spec.validate();
  QuantizeResult res;
  res.grid_fallback = true;
  res.tolerance = 1e-2;
  const Interval ls = lambda_support(phi);
  const auto lambdas = intersect(normalize_intervals({{-spec.lambda_max, -spec.lambda_min},
                                                      {spec.lambda_min, spec.lambda_max}}),
                                 {ls});
  const double mu_cap = opt.grid_mu_max > 0.0 ? opt.grid_mu_max : spec.mu_max;
  const auto& rule = gauss_legendre(opt.grid_order);
  auto fixed = [&](const Interval& iv, const std::function<Complex(double)>& f) {
    Complex sum = 0.0;
    const double w = iv.length() / opt.grid_panels;
    for (int k = 0; k < opt.grid_panels; ++k) {
      const double a = iv.lo + k * w, mid = a + 0.5 * w;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) sum += 0.5 * w * rule.weights[q] * f(mid + 0.5 * w * rule.nodes[q]);
    }
    return sum;
  };
  for (const Interval& li : lambdas) {
    const Complex part = fixed(li, [&](double lambda) {
      const Interval ms = intersect_one_or_empty(mu_support(phi, lambda), {-mu_cap, mu_cap});
      if (!(ms.hi > ms.lo)) return Complex(0.0);
      return fixed(ms, [&](double mu) {
        ++res.integral.evaluations;
        return trace(RepParams(lambda, mu));
      });
    });
    res.integral.panels.push_back({li.lo, li.hi, part, 0.0});
    res.integral.core += part;
  }
  res.integral.total = res.integral.core;
  res.value = inversion_constant() * res.integral.total;
  return res;
}

QuantizeResult adaptive_route(const std::function<Complex(const RepParams&)>& trace, const LambdaMuDomain& domain,
                              const QuantizeOptions& opt) {
  QuantizeResult res;
  res.integral = integrate_lambda_mu([&](double lambda, double mu) { return trace(RepParams(lambda, mu)); }, domain,
                                     opt.truncation);
  if (!res.integral.converged) throw NumericalFailure("parameter-plane quadrature did not converge");
  res.value = inversion_constant() * res.integral.total;
  return res;
}

// Two kernels: mu integrated in closed form, adaptive panels in lambda.
QuantizeResult lambda_route(const std::function<Complex(double)>& trace, const TestFunction4& a,
                            const TestFunction4& b, const QuantizeOptions& opt) {
  const Interval la = lambda_support(a, opt.trace.window_sigmas);
  const Interval lb = lambda_support(b, opt.trace.window_sigmas);
  QuantizeResult res;
  res.mu_closed_form = true;
  res.integral = integrate_lambda(trace, intersect_one_or_empty(la, lb), opt.truncation);
  if (!res.integral.converged) throw NumericalFailure("lambda quadrature did not converge");
  res.value = inversion_constant() * res.integral.total;
  return res;
}

const Grid1D& require_grid(const std::optional<Grid1D>& grid) {
  if (!grid) throw std::invalid_argument("operator-valued symbols need a grid");
  return *grid;
}

}  // namespace

QuantizeResult quantize(const SymbolField& sigma, const TestFunction4& phi, const Point& x, const QuantizeOptions& opt,
                        const std::optional<Grid1D>& grid) {
  switch (sigma.kind()) {
    case SymbolField::Kind::Identity:
      return adaptive_route([&](const RepParams& p) { return trace_translate(phi, p, x, opt.trace); },
                            parameter_domain(phi, opt.trace.window_sigmas), opt);
    case SymbolField::Kind::Kernel: {
      const TestFunction4 kappa = sigma.kernel_at(x);
      return lambda_route([&](double lambda) { return mu_integrated_trace(kappa, phi, lambda, x, opt.trace); },
                          kappa, phi, opt);
    }
    case SymbolField::Kind::Operator:
      break;
  }
  const Grid1D& g = require_grid(grid);
  return grid_route(
      [&](const RepParams& p) { return (pi_grid(p, x, g) * sigma(x, p, g) * group_fourier(phi, p, g)).trace(); }, phi,
      opt);
}

QuantizeResult quantize_composed(const SymbolField& sigma, const TestFunction4& phi, const Point& x,
                                 const QuantizeOptions& opt, TraceOrder order, const std::optional<Grid1D>& grid) {
  const TestFunction4 shifted = phi.left_translate(x);
  switch (sigma.kind()) {
    case SymbolField::Kind::Identity:
      return adaptive_route([&](const RepParams& p) { return trace_single(shifted, p, opt.trace); },
                            parameter_domain(shifted, opt.trace.window_sigmas), opt);
    case SymbolField::Kind::Kernel: {
      const TestFunction4 kappa = sigma.kernel_at(x);
      const bool kernel_first = order == TraceOrder::KernelFirst;
      const Point e = Point::identity();
      return lambda_route(
          [&](double lambda) {
            return kernel_first ? mu_integrated_trace(kappa, shifted, lambda, e, opt.trace)
                                : mu_integrated_trace(shifted, kappa, lambda, e, opt.trace);
          },
          kappa, shifted, opt);
    }
    case SymbolField::Kind::Operator:
      break;
  }
  const Grid1D& g = require_grid(grid);
  return grid_route(
      [&](const RepParams& p) {
        const GridOperator s = sigma(x, p, g);
        const GridOperator f = group_fourier(shifted, p, g);
        return (order == TraceOrder::KernelFirst ? s * f : f * s).trace();
      },
      shifted, opt);
}

}  // namespace engel
