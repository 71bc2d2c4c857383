#include "engel/traces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "engel/wavepacket.hpp"

namespace engel {

namespace {

AdaptiveOptions adaptive(const TraceOptions& opt, int panels) {
  AdaptiveOptions a;
  a.rel_tol = opt.rel_tol;
  a.order = opt.order;
  a.initial_panels = panels;
  return a;
}

Interval intersect_one(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

std::vector<Interval> outside(const Interval& support, double limit) {
  return normalize_intervals({{support.lo, std::min(support.hi, -limit)}, {std::max(support.lo, limit), support.hi}});
}

using Parts = Eigen::Vector4d;  // Re core, Im core, Re tail, Im tail

}  // namespace

Complex trace_translate(const TestFunction4& f, const RepParams& p, const Point& x, const TraceOptions& opt) {
  const SupportBox box = f.support(opt.window_sigmas);
  if (x.x1 < box.x1.lo || x.x1 > box.x1.hi) return 0.0;
  const auto windows = frequency_v_windows(f, p, opt.window_sigmas);
  if (windows.empty()) return 0.0;
  auto integrand = [&](double u) {
    return std::polar(1.0, representation_phase(p, x, u)) * kernel(f, p, u + x.x1, u);
  };
  return integrate_adaptive<Complex>(integrand, std::span<const Interval>(windows), adaptive(opt, 4)).value;
}

Complex trace_single(const TestFunction4& f, const RepParams& p, const TraceOptions& opt) {
  return trace_translate(f, p, Point::identity(), opt);
}

Complex trace_translate_product(const TestFunction4& g, const TestFunction4& f, const RepParams& p, const Point& x,
                                const TraceOptions& opt) {
  const SupportBox gb = g.support(opt.window_sigmas);
  const SupportBox fb = f.support(opt.window_sigmas);
  const auto g_windows = frequency_v_windows(g, p, opt.window_sigmas);
  const auto f_windows = frequency_v_windows(f, p, opt.window_sigmas);
  if (g_windows.empty() || f_windows.empty()) return 0.0;
  const AdaptiveOptions inner_opt = adaptive(opt, 2);

  auto outer = [&](double u) -> Complex {
    const Interval from_g{u + x.x1 - gb.x1.hi, u + x.x1 - gb.x1.lo};
    const Interval from_f{u + fb.x1.lo, u + fb.x1.hi};
    const Interval local = intersect_one(from_g, from_f);
    if (!(local.hi > local.lo)) return 0.0;
    const auto t_windows = intersect(g_windows, {local});
    if (t_windows.empty()) return 0.0;
    auto inner = [&](double t) { return kernel(g, p, u + x.x1, t) * kernel(f, p, t, u); };
    const Complex value = integrate_adaptive<Complex>(inner, std::span<const Interval>(t_windows), inner_opt).value;
    return std::polar(1.0, representation_phase(p, x, u)) * value;
  };
  return integrate_adaptive<Complex>(outer, std::span<const Interval>(f_windows), adaptive(opt, 4)).value;
}

Complex trace_product(const TestFunction4& g, const TestFunction4& f, const RepParams& p, const TraceOptions& opt) {
  return trace_translate_product(g, f, p, Point::identity(), opt);
}

LambdaMuIntegral integrate_lambda_mu(const std::function<Complex(double, double)>& integrand,
                                     const LambdaMuDomain& domain, const QuadratureSpec& spec) {
  spec.validate();
  LambdaMuIntegral res;
  long inner_evals = 0;
  bool inner_ok = true;

  auto mu_parts = [&](double lambda) {
    Parts out = Parts::Zero();
    const Interval ms = domain.mu(lambda);
    if (!(ms.hi > ms.lo)) return out;
    auto f = [&](double mu) { return integrand(lambda, mu); };
    AdaptiveOptions opt;
    opt.rel_tol = spec.inner_rel_tol;
    opt.order = spec.order;
    opt.initial_panels = 2;
    const auto core = intersect({ms}, {{-spec.mu_max, spec.mu_max}});
    if (!core.empty()) {
      const auto r = integrate_adaptive<Complex>(f, std::span<const Interval>(core), opt);
      out(0) = r.value.real();
      out(1) = r.value.imag();
      inner_evals += r.evaluations;
      inner_ok = inner_ok && r.converged;
    }
    if (domain.include_outside_core) {
      const auto tails = outside(ms, spec.mu_max);
      if (!tails.empty()) {
        const auto r = integrate_adaptive<Complex>(f, std::span<const Interval>(tails), opt);
        out(2) = r.value.real();
        out(3) = r.value.imag();
        inner_evals += r.evaluations;
        inner_ok = inner_ok && r.converged;
      }
    }
    return out;
  };
  auto as_complex = [](const Parts& v, int k) { return Complex(v(2 * k), v(2 * k + 1)); };

  AdaptiveOptions outer;
  outer.rel_tol = spec.rel_tol;
  outer.order = spec.order;
  outer.initial_panels = spec.panels;

  const Interval ls = domain.lambda;
  const auto core_lambda = intersect(normalize_intervals({{-spec.lambda_max, -spec.lambda_min},
                                                          {spec.lambda_min, spec.lambda_max}}),
                                     {ls});
  if (!core_lambda.empty()) {
    const auto r = integrate_adaptive<Parts>(mu_parts, std::span<const Interval>(core_lambda), outer, true);
    res.core = as_complex(r.value, 0);
    res.mu_tail = as_complex(r.value, 1);
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    res.evaluations += r.evaluations;
    for (std::size_t k = 0; k < r.panels.size(); ++k)
      res.panels.push_back({r.panels[k].lo, r.panels[k].hi, as_complex(r.panel_values[k], 0),
                            as_complex(r.panel_values[k], 1)});
  }
  if (domain.include_outside_core) {
    AdaptiveOptions side = outer;
    side.initial_panels = 2;
    const auto gap = intersect(normalize_intervals({{-spec.lambda_min, 0.0}, {0.0, spec.lambda_min}}), {ls});
    if (!gap.empty()) {
      const auto r = integrate_adaptive<Parts>(mu_parts, std::span<const Interval>(gap), side);
      res.gap = as_complex(r.value, 0) + as_complex(r.value, 1);
      res.error_estimate += r.error_estimate;
      res.converged = res.converged && r.converged;
      res.evaluations += r.evaluations;
    }
    const auto tail = outside(ls, spec.lambda_max);
    if (!tail.empty()) {
      const auto r = integrate_adaptive<Parts>(mu_parts, std::span<const Interval>(tail), side);
      res.lambda_tail = as_complex(r.value, 0) + as_complex(r.value, 1);
      res.error_estimate += r.error_estimate;
      res.converged = res.converged && r.converged;
      res.evaluations += r.evaluations;
    }
  }
  res.converged = res.converged && inner_ok;
  res.evaluations += inner_evals;
  res.total = res.core + res.mu_tail + res.gap + res.lambda_tail;
  return res;
}

LambdaMuDomain parameter_domain(const TestFunction4& f, double sigmas) {
  LambdaMuDomain d;
  d.lambda = lambda_support(f, sigmas);
  d.mu = [f, sigmas](double lambda) { return mu_support(f, lambda, sigmas); };
  return d;
}

LambdaMuDomain parameter_domain(const TestFunction4& f, const TestFunction4& g, double sigmas) {
  LambdaMuDomain d;
  d.lambda = intersect_one(lambda_support(f, sigmas), lambda_support(g, sigmas));
  d.mu = [f, g, sigmas](double lambda) {
    return intersect_one(mu_support(f, lambda, sigmas), mu_support(g, lambda, sigmas));
  };
  return d;
}

namespace {

// A kernel term at fixed (a, v) as P(mu) exp(e2 mu^2 + e1 mu + e0).
struct MuGaussian {
  std::vector<Complex> poly;
  Complex e0, e1, e2;
};

struct KernelTerm {
  std::vector<std::pair<Exponent, Complex>> monomials;
  Matrix4cd q;
  Vector4cd l;
  Complex c;
  int degree_w1 = 0;
};

std::vector<KernelTerm> kernel_terms(const TestFunction4& f) {
  std::vector<KernelTerm> out;
  for (const auto& t : f.fourier3_terms()) {
    KernelTerm k{{}, t.quadratic(), t.linear(), t.constant(), 0};
    for (const auto& [e, c] : t.poly().terms()) {
      k.monomials.emplace_back(e, c);
      k.degree_w1 = std::max(k.degree_w1, e[1]);
    }
    out.push_back(std::move(k));
  }
  return out;
}

// z = (x1, w1 - m/(2 lambda), -lambda v, lambda) = z0 + m e, where m is mu
// measured from a reference point chosen by the caller.
MuGaussian restrict_to_mu(const KernelTerm& k, double lambda, double x1, double w1, double v) {
  const Vector4cd z0(x1, w1, -lambda * v, lambda);
  const double s = -0.5 / lambda;
  const Vector4cd qz = k.q * z0;
  MuGaussian g;
  g.e0 = -0.5 * (z0.transpose() * qz)(0) + (k.l.transpose() * z0)(0) + k.c;
  g.e1 = (k.l(1) - qz(1)) * s;
  g.e2 = -0.5 * k.q(1, 1) * s * s;
  g.poly.assign(static_cast<std::size_t>(k.degree_w1 + 1), 0.0);
  for (const auto& [e, coef] : k.monomials) {
    Complex base = coef;
    for (int i : {0, 2, 3})
      for (int r = 0; r < e[static_cast<std::size_t>(i)]; ++r) base *= z0(i);
    // (z0_1 + s mu)^{e1}
    const int n = e[1];
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
      g.poly[static_cast<std::size_t>(j)] += base * binom * std::pow(z0(1), n - j) * std::pow(s, j);
      binom = binom * (n - j) / (j + 1);
    }
  }
  return g;
}

std::vector<Complex> poly_product(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<Interval> mu_free_v_windows(const TestFunction4& f, double lambda, double sigmas) {
  std::vector<Interval> out;
  for (const auto& box : f.term_supports(sigmas)) {
    if (lambda < box.w[2].lo || lambda > box.w[2].hi) continue;
    const double a = -box.w[1].hi / lambda, b = -box.w[1].lo / lambda;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return normalize_intervals(std::move(out));
}

Complex mu_integrated_trace(const TestFunction4& g, const TestFunction4& f, double lambda, const Point& x,
                            const TraceOptions& opt) {
  if (lambda == 0.0) throw std::invalid_argument("lambda must be nonzero");
  const SupportBox gb = g.support(opt.window_sigmas);
  const SupportBox fb = f.support(opt.window_sigmas);
  const auto g_windows = mu_free_v_windows(g, lambda, opt.window_sigmas);
  const auto f_windows = mu_free_v_windows(f, lambda, opt.window_sigmas);
  if (g_windows.empty() || f_windows.empty()) return 0.0;
  const auto g_terms = kernel_terms(g);
  const auto f_terms = kernel_terms(f);
  const double kc = std::pow(2.0 * std::numbers::pi, 3.0);  // square of the kernel constant
  const Complex phase_mu(0.0, -x.x2 / (2.0 * lambda));
  const AdaptiveOptions inner_opt = adaptive(opt, 2);

  auto outer = [&](double u) -> Complex {
    const Interval from_g{u + x.x1 - gb.x1.hi, u + x.x1 - gb.x1.lo};
    const Interval from_f{u + fb.x1.lo, u + fb.x1.hi};
    const Interval local = intersect_one(from_g, from_f);
    if (!(local.hi > local.lo)) return 0.0;
    const auto t_windows = intersect(g_windows, {local});
    if (t_windows.empty()) return 0.0;
    auto inner = [&](double t) {
      // mu = m + lambda^2 t^2 puts the w1 slot of K_g at 0; the large parts of
      // the two exponents then cancel exactly.
      const double w1_f = 0.5 * lambda * (u - t) * (u + t);
      const Complex phase(0.0, lambda * x.x4 - lambda * x.x3 * u + 0.5 * lambda * x.x2 * (u - t) * (u + t));
      Complex sum = 0.0;
      for (const auto& gt : g_terms) {
        const MuGaussian a = restrict_to_mu(gt, lambda, u + x.x1 - t, 0.0, t);
        for (const auto& ft : f_terms) {
          const MuGaussian b = restrict_to_mu(ft, lambda, t - u, w1_f, u);
          sum += gaussian_moment_integral(poly_product(a.poly, b.poly), a.e2 + b.e2, a.e1 + b.e1 + phase_mu,
                                          a.e0 + b.e0 + phase);
        }
      }
      return kc * sum;
    };
    return integrate_adaptive<Complex>(inner, std::span<const Interval>(t_windows), inner_opt).value;
  };
  return integrate_adaptive<Complex>(outer, std::span<const Interval>(f_windows), adaptive(opt, 4)).value;
}

LambdaMuIntegral integrate_lambda(const std::function<Complex(double)>& integrand, const Interval& support,
                                  const QuadratureSpec& spec) {
  spec.validate();
  LambdaMuIntegral res;
  AdaptiveOptions outer;
  outer.rel_tol = spec.rel_tol;
  outer.order = spec.order;
  outer.initial_panels = spec.panels;
  const auto core = intersect(normalize_intervals({{-spec.lambda_max, -spec.lambda_min},
                                                   {spec.lambda_min, spec.lambda_max}}),
                              {support});
  if (!core.empty()) {
    const auto r = integrate_adaptive<Complex>(integrand, std::span<const Interval>(core), outer, true);
    res.core = r.value;
    res.error_estimate += r.error_estimate;
    res.converged = r.converged;
    res.evaluations += r.evaluations;
    for (std::size_t k = 0; k < r.panels.size(); ++k)
      res.panels.push_back({r.panels[k].lo, r.panels[k].hi, r.panel_values[k], 0.0});
  }
  AdaptiveOptions side = outer;
  side.initial_panels = 2;
  const auto gap = intersect(normalize_intervals({{-spec.lambda_min, 0.0}, {0.0, spec.lambda_min}}), {support});
  if (!gap.empty()) {
    const auto r = integrate_adaptive<Complex>(integrand, std::span<const Interval>(gap), side);
    res.gap = r.value;
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    res.evaluations += r.evaluations;
  }
  const auto tail = outside(support, spec.lambda_max);
  if (!tail.empty()) {
    const auto r = integrate_adaptive<Complex>(integrand, std::span<const Interval>(tail), side);
    res.lambda_tail = r.value;
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    res.evaluations += r.evaluations;
  }
  res.total = res.core + res.gap + res.lambda_tail;
  return res;
}

}  // namespace engel
