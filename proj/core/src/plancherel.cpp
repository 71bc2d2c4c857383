#include "engel/plancherel.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace engel {

namespace {

constexpr double kPi = std::numbers::pi;

// Restriction of an F3 form to fixed (w2, w3, w4): a polynomial in x1 times
// exp(-q x1^2 / 2 + beta x1 + gamma).
struct SliceX1 {
  std::vector<Complex> poly;
  Complex q, beta, gamma;
};

SliceX1 slice(const GaussianForm& g, const std::array<double, 3>& w) {
  const Matrix4cd& q = g.quadratic();
  const Vector4cd& l = g.linear();
  SliceX1 s;
  s.q = q(0, 0);
  s.beta = l(0);
  s.gamma = g.constant();
  for (int k = 1; k < 4; ++k) {
    const double wk = w[static_cast<std::size_t>(k - 1)];
    s.beta -= q(0, k) * wk;
    s.gamma += l(k) * wk;
    for (int m = 1; m < 4; ++m) s.gamma -= 0.5 * q(k, m) * wk * w[static_cast<std::size_t>(m - 1)];
  }
  const int degree = g.poly().degree_in(0);
  s.poly.assign(static_cast<std::size_t>(degree + 1), 0.0);
  for (const auto& [e, c] : g.poly().terms()) {
    Complex coeff = c;
    for (int k = 1; k < 4; ++k) coeff *= std::pow(w[static_cast<std::size_t>(k - 1)], e[static_cast<std::size_t>(k)]);
    s.poly[static_cast<std::size_t>(e[0])] += coeff;
  }
  return s;
}

// int |sum_i F3_i(x1, w)|^2 dx1 in closed form.
double x1_integral_of_square(const std::vector<GaussianForm>& forms, const std::array<double, 3>& w) {
  std::vector<SliceX1> slices;
  slices.reserve(forms.size());
  for (const auto& g : forms) slices.push_back(slice(g, w));
  double sum = 0.0;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t j = i; j < slices.size(); ++j) {
      const auto& a = slices[i];
      const auto& b = slices[j];
      std::vector<Complex> prod(a.poly.size() + b.poly.size() - 1, 0.0);
      for (std::size_t r = 0; r < a.poly.size(); ++r)
        for (std::size_t s = 0; s < b.poly.size(); ++s) prod[r + s] += std::conj(a.poly[r]) * b.poly[s];
      const Complex value = gaussian_moment_integral(prod, -0.5 * (std::conj(a.q) + b.q), std::conj(a.beta) + b.beta,
                                                     std::conj(a.gamma) + b.gamma);
      sum += (i == j ? 1.0 : 2.0) * value.real();
    }
  }
  return sum;
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

std::vector<Interval> clip(const std::vector<Interval>& pieces, const Interval& support) {
  return intersect(normalize_intervals(pieces), {support});
}

std::vector<Interval> outside(const Interval& support, double limit) {
  return normalize_intervals({{support.lo, std::min(support.hi, -limit)}, {std::max(support.lo, limit), support.hi}});
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min)) throw std::invalid_argument("QuadratureSpec: need 0 < lambda_min < lambda_max");
  if (!(mu_max > 0.0)) throw std::invalid_argument("QuadratureSpec: mu_max must be positive");
  if (panels < 1 || order < 1 || order > 128) throw std::invalid_argument("QuadratureSpec: bad panel count or order");
  if (!(rel_tol > 0.0) || !(inner_rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
  if (!(window_sigmas > 0.0)) throw std::invalid_argument("QuadratureSpec: window_sigmas must be positive");
}

std::string QuadratureSpec::to_text() const {
  std::ostringstream os;
  os << "lambda_min=" << format_double(lambda_min) << "\n"
     << "lambda_max=" << format_double(lambda_max) << "\n"
     << "mu_max=" << format_double(mu_max) << "\n"
     << "panels=" << panels << "\n"
     << "order=" << order << "\n"
     << "rel_tol=" << format_double(rel_tol) << "\n"
     << "inner_rel_tol=" << format_double(inner_rel_tol) << "\n"
     << "window_sigmas=" << format_double(window_sigmas) << "\n";
  return os.str();
}

QuadratureSpec QuadratureSpec::from_text(const std::string& text) {
  QuadratureSpec spec;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("QuadratureSpec: expected key=value, got '" + line + "'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string bad = "QuadratureSpec: bad value for '" + key + "'";
    auto read = [&](auto& dst) {
      std::size_t used = 0;
      try {
        if constexpr (std::is_same_v<std::decay_t<decltype(dst)>, int>) {
          dst = std::stoi(value, &used);
        } else {
          dst = std::stod(value, &used);
        }
      } catch (const std::exception&) {
        throw std::invalid_argument(bad);
      }
      if (used != value.size()) throw std::invalid_argument(bad);
    };
    if (key == "lambda_min") read(spec.lambda_min);
    else if (key == "lambda_max") read(spec.lambda_max);
    else if (key == "mu_max") read(spec.mu_max);
    else if (key == "panels") read(spec.panels);
    else if (key == "order") read(spec.order);
    else if (key == "rel_tol") read(spec.rel_tol);
    else if (key == "inner_rel_tol") read(spec.inner_rel_tol);
    else if (key == "window_sigmas") read(spec.window_sigmas);
    else throw std::invalid_argument("QuadratureSpec: unknown key '" + key + "'");
  }
  spec.validate();
  return spec;
}

double hs_norm_squared(const TestFunction4& f, const RepParams& p, double rel_tol, double sigmas) {
  const auto windows = frequency_v_windows(f, p, sigmas);
  if (windows.empty()) return 0.0;
  const auto& forms = f.fourier3_terms();
  AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  opt.initial_panels = 4;
  const auto r = integrate_adaptive<double>(
      [&](double v) { return x1_integral_of_square(forms, frequency_curve(p, v)); }, std::span<const Interval>(windows),
      opt);
  return std::pow(2.0 * kPi, 3) * r.value;
}

double hs_norm_squared_grid(const TestFunction4& f, const RepParams& p, const Grid1D& grid) {
  const double hs = hilbert_schmidt_norm(gft_via_symbol(f, p, grid));
  return hs * hs;
}

Interval lambda_support(const TestFunction4& f, double sigmas) {
  const auto boxes = f.term_supports(sigmas);
  if (boxes.empty()) return {0.0, 0.0};
  Interval out = boxes.front().w[2];
  for (const auto& b : boxes) out = hull(out, b.w[2]);
  return out;
}

Interval mu_support(const TestFunction4& f, double lambda, double sigmas) {
  bool any = false;
  Interval out{0.0, 0.0};
  for (const auto& b : f.term_supports(sigmas)) {
    if (lambda < b.w[2].lo || lambda > b.w[2].hi) continue;
    // mu = w3^2 - 2 lambda w2
    const double lo3 = b.w[1].lo, hi3 = b.w[1].hi;
    const double sq_lo = (lo3 <= 0.0 && hi3 >= 0.0) ? 0.0 : std::min(lo3 * lo3, hi3 * hi3);
    const double sq_hi = std::max(lo3 * lo3, hi3 * hi3);
    const double t1 = -2.0 * lambda * b.w[0].lo, t2 = -2.0 * lambda * b.w[0].hi;
    const Interval range{sq_lo + std::min(t1, t2), sq_hi + std::max(t1, t2)};
    out = any ? hull(out, range) : range;
    any = true;
  }
  return out;
}

PlancherelResult plancherel_ratio(const TestFunction4& f, const QuadratureSpec& spec) {
  spec.validate();
  PlancherelResult res;
  res.norm_squared = l2_norm_squared(f);
  const double sig = spec.window_sigmas;
  const double hs_tol = 0.01 * spec.inner_rel_tol;

  long inner_evals = 0;
  bool inner_ok = true;
  // (mu in [-M, M], mu outside) for fixed lambda.
  auto mu_parts = [&](double lambda) {
    Eigen::Vector2d out = Eigen::Vector2d::Zero();
    const Interval ms = mu_support(f, lambda, sig);
    if (!(ms.hi > ms.lo)) return out;
    const RepParams base(lambda, 0.0);
    auto integrand = [&](double mu) { return hs_norm_squared(f, RepParams(base.lambda, mu), hs_tol, sig); };
    AdaptiveOptions opt;
    opt.rel_tol = spec.inner_rel_tol;
    opt.order = spec.order;
    opt.initial_panels = 2;
    const auto core = clip({{-spec.mu_max, spec.mu_max}}, ms);
    if (!core.empty()) {
      const auto r = integrate_adaptive<double>(integrand, std::span<const Interval>(core), opt);
      out(0) = r.value;
      inner_evals += r.evaluations;
      inner_ok = inner_ok && r.converged;
    }
    const auto tails = outside(ms, spec.mu_max);
    if (!tails.empty()) {
      const auto r = integrate_adaptive<double>(integrand, std::span<const Interval>(tails), opt);
      out(1) = r.value;
      inner_evals += r.evaluations;
      inner_ok = inner_ok && r.converged;
    }
    return out;
  };

  const Interval ls = lambda_support(f, sig);
  AdaptiveOptions outer;
  outer.rel_tol = spec.rel_tol;
  outer.order = spec.order;
  outer.initial_panels = spec.panels;

  const auto core_lambda =
      clip({{-spec.lambda_max, -spec.lambda_min}, {spec.lambda_min, spec.lambda_max}}, ls);
  if (!core_lambda.empty()) {
    const auto r = integrate_adaptive<Eigen::Vector2d>(mu_parts, std::span<const Interval>(core_lambda), outer, true);
    res.core = r.value(0);
    res.mu_tail = r.value(1);
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < r.panels.size(); ++k) {
      cumulative += r.panel_values[k](0);
      res.panels.push_back({r.panels[k].lo, r.panels[k].hi, r.panel_values[k](0), r.panel_values[k](1), cumulative});
    }
    res.evaluations += r.evaluations;
  }

  AdaptiveOptions side = outer;
  side.initial_panels = 2;
  const auto gap = clip({{-spec.lambda_min, 0.0}, {0.0, spec.lambda_min}}, ls);
  if (!gap.empty()) {
    const auto r = integrate_adaptive<Eigen::Vector2d>(mu_parts, std::span<const Interval>(gap), side);
    res.gap = r.value.sum();
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    res.evaluations += r.evaluations;
  }
  const auto tail = outside(ls, spec.lambda_max);
  if (!tail.empty()) {
    const auto r = integrate_adaptive<Eigen::Vector2d>(mu_parts, std::span<const Interval>(tail), side);
    res.lambda_tail = r.value.sum();
    res.error_estimate += r.error_estimate;
    res.converged = res.converged && r.converged;
    res.evaluations += r.evaluations;
  }

  res.converged = res.converged && inner_ok;
  res.evaluations += inner_evals;
  res.total = res.core + res.mu_tail + res.gap + res.lambda_tail;
  res.ratio = res.total / res.norm_squared;
  res.core_ratio = res.core / res.norm_squared;
  return res;
}

double predicted_plancherel_ratio() {
  const double det = change_of_variables_jacobian().absolute_value.get_d();
  return std::pow(2.0 * kPi, 3) / det;
}

double inversion_constant() { return 1.0 / predicted_plancherel_ratio(); }

ConstantVerdict adjudicate_plancherel_constant(double measured, double match_tolerance) {
  ConstantVerdict v;
  v.measured = measured;
  v.stated_value = 8.0 * std::pow(kPi, 4);
  v.derived_value = 4.0 * std::pow(kPi, 3);
  v.predicted = predicted_plancherel_ratio();
  v.stated_deviation = std::abs(measured - v.stated_value) / v.stated_value;
  v.derived_deviation = std::abs(measured - v.derived_value) / v.derived_value;
  v.predicted_deviation = std::abs(measured - v.predicted) / v.predicted;
  if (v.stated_deviation <= match_tolerance && v.stated_deviation <= v.derived_deviation) {
    v.status = "flag: adjudicated (matches the stated 2^3 pi^4)";
  } else if (v.derived_deviation <= match_tolerance) {
    v.status = "flag: adjudicated (matches the derivation's 2^2 pi^3)";
  } else {
    v.status = "flag: novel value";
  }
  return v;
}

}  // namespace engel
