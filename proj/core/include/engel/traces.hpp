#pragma once

// Traces of products of group Fourier transforms and their integrals over
// the (lambda, mu) parameter plane.

#include <functional>
#include <vector>

#include "engel/plancherel.hpp"

namespace engel {

struct TraceOptions {
  double rel_tol = 1e-8;
  int order = 10;
  double window_sigmas = 9.0;
};

// Tr(pi(x) pi(f)) = int e^{i theta_x(u)} K_f(u + x1, u) du.
Complex trace_translate(const TestFunction4& f, const RepParams& p, const Point& x, const TraceOptions& opt = {});

// Tr(pi(f)) = int K_f(u, u) du.
Complex trace_single(const TestFunction4& f, const RepParams& p, const TraceOptions& opt = {});

// Tr(pi(x) pi(g) pi(f)) = int du e^{i theta_x(u)} int dt K_g(u + x1, t) K_f(t, u).
Complex trace_translate_product(const TestFunction4& g, const TestFunction4& f, const RepParams& p, const Point& x,
                                const TraceOptions& opt = {});

// Tr(pi(g) pi(f)) = int du int dt K_g(u, t) K_f(t, u).
Complex trace_product(const TestFunction4& g, const TestFunction4& f, const RepParams& p,
                      const TraceOptions& opt = {});

struct LambdaMuPanel {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  Complex core = 0.0;
  Complex mu_tail = 0.0;
};

struct LambdaMuIntegral {
  Complex core = 0.0;
  Complex mu_tail = 0.0;
  Complex gap = 0.0;
  Complex lambda_tail = 0.0;
  Complex total = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
  std::vector<LambdaMuPanel> panels;
};

struct LambdaMuDomain {
  Interval lambda;                               // support in lambda
  std::function<Interval(double lambda)> mu;     // support in mu for fixed lambda
  bool include_outside_core = true;              // gap and tails
};

// Nested adaptive Gauss-Legendre integration of F(lambda, mu) split into the
// core region of `spec`, its mu tails, the gap 0 < |lambda| < lambda_min and
// the lambda tails |lambda| > lambda_max.
LambdaMuIntegral integrate_lambda_mu(const std::function<Complex(double, double)>& integrand,
                                     const LambdaMuDomain& domain, const QuadratureSpec& spec);

// int Tr(pi_{lambda,mu}(x) pi(g) pi(f)) dmu over all mu. Each kernel depends
// on mu through a Gaussian factor, so the mu integral is done in closed form
// and only (u, t) are integrated numerically.
Complex mu_integrated_trace(const TestFunction4& g, const TestFunction4& f, double lambda, const Point& x,
                            const TraceOptions& opt = {});

// Windows in v where K_f(., v) is non-negligible for some mu.
std::vector<Interval> mu_free_v_windows(const TestFunction4& f, double lambda, double sigmas = 9.0);

// Adaptive integral of F(lambda) over `support`, split like
// integrate_lambda_mu (mu_tail stays zero).
LambdaMuIntegral integrate_lambda(const std::function<Complex(double)>& integrand, const Interval& support,
                                  const QuadratureSpec& spec);

// Support of the parameter-plane integrand for kernels f (and g).
LambdaMuDomain parameter_domain(const TestFunction4& f, double sigmas = 9.0);
LambdaMuDomain parameter_domain(const TestFunction4& f, const TestFunction4& g, double sigmas = 9.0);

}  // namespace engel
