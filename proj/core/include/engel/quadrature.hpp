#pragma once

// Gauss-Legendre rules and adaptive panel-doubling integration.
//
// A panel is accepted when the n-point rule on the whole panel and the sum of
// the rules on its two halves agree within the panel's share of the
// tolerance; otherwise both halves are refined recursively.

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "engel/error.hpp"

namespace engel {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Cached; n in [1, 128].
const GaussLegendreRule& gauss_legendre(int n);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

struct AdaptiveOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  int order = 10;
  int max_depth = 40;
  int initial_panels = 1;  // per interval
};

template <typename R>
R zero_value() {
  if constexpr (requires { R::Zero(); }) {
    return R::Zero();
  } else {
    return R{};
  }
}

template <typename R>
struct AdaptiveResult {
  R value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
  std::vector<Interval> panels;  // accepted panels (only when requested)
  std::vector<R> panel_values;
};

// Size used for error control; vector-valued integrands use the l1 norm.
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
template <typename R>
  requires requires(const R& r) { r.cwiseAbs().sum(); }
double magnitude(const R& r) {
  return r.cwiseAbs().sum();
}

template <typename R, typename F>
R gauss_legendre_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R sum = zero_value<R>();
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return sum * half;
}

template <typename R, typename F>
R integrate_fixed(F&& f, double a, double b, int panels, int order) {
  const auto& rule = gauss_legendre(order);
  R sum = zero_value<R>();
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) sum += gauss_legendre_panel<R>(f, a + p * w, a + (p + 1) * w, rule);
  return sum;
}

namespace detail {

template <typename R, typename F>
void refine(F& f, double a, double b, R whole, double tol, int depth, const AdaptiveOptions& opt,
            const GaussLegendreRule& rule, AdaptiveResult<R>& out, bool keep_panels) {
  const double m = 0.5 * (a + b);
  const R left = gauss_legendre_panel<R>(f, a, m, rule);
  const R right = gauss_legendre_panel<R>(f, m, b, rule);
  out.evaluations += 2 * static_cast<long>(rule.nodes.size());
  const R split = left + right;
  const double diff = magnitude(R(split - whole));
  if (!std::isfinite(diff))
    throw NumericalFailure("adaptive quadrature: non-finite integrand on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
  if (diff <= tol || depth >= opt.max_depth || !(m > a && b > m)) {
    if (diff > tol) out.converged = false;
    out.value += split;
    out.error_estimate += diff;
    if (keep_panels) {
      out.panels.push_back({a, b});
      out.panel_values.push_back(split);
    }
    return;
  }
  refine(f, a, m, left, 0.5 * tol, depth + 1, opt, rule, out, keep_panels);
  refine(f, m, b, right, 0.5 * tol, depth + 1, opt, rule, out, keep_panels);
}

}  // namespace detail

// Integrates f over the union of the given intervals.
template <typename R, typename F>
AdaptiveResult<R> integrate_adaptive(F&& f, std::span<const Interval> intervals, const AdaptiveOptions& opt = {},
                                     bool keep_panels = false) {
  AdaptiveResult<R> out;
  out.value = zero_value<R>();
  const auto& rule = gauss_legendre(opt.order);
  double total_length = 0.0;
  for (const auto& iv : intervals) total_length += std::max(0.0, iv.length());
  if (total_length <= 0.0) return out;

  // Coarse pass fixes the absolute scale for the relative tolerance.
  std::vector<std::pair<Interval, R>> seeds;
  double scale = 0.0;
  for (const auto& iv : intervals) {
    if (!(iv.hi > iv.lo)) continue;
    const int n = std::max(1, opt.initial_panels);
    const double w = iv.length() / n;
    for (int p = 0; p < n; ++p) {
      const Interval piece{iv.lo + p * w, p + 1 == n ? iv.hi : iv.lo + (p + 1) * w};
      const R v = gauss_legendre_panel<R>(f, piece.lo, piece.hi, rule);
      out.evaluations += static_cast<long>(rule.nodes.size());
      scale += magnitude(v);
      seeds.emplace_back(piece, v);
    }
  }
  const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);
  for (const auto& [piece, v] : seeds) {
    const double share = tol * piece.length() / total_length;
    detail::refine(f, piece.lo, piece.hi, v, share, 0, opt, rule, out, keep_panels);
  }
  return out;
}

template <typename R, typename F>
AdaptiveResult<R> integrate_adaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
  const Interval iv{a, b};
  return integrate_adaptive<R>(std::forward<F>(f), std::span<const Interval>(&iv, 1), opt);
}

// Sorts, drops empty pieces and merges overlaps.
std::vector<Interval> normalize_intervals(std::vector<Interval> intervals);
std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b);

}  // namespace engel
