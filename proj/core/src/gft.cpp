#include "engel/gft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace engel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Interval> term_frequency_windows(const SupportBox& box, const RepParams& p) {
  const double l = p.lambda;
  if (l < box.w[2].lo || l > box.w[2].hi) return {};
  // w3 = -lambda v
  const double a3 = -box.w[1].hi / l, b3 = -box.w[1].lo / l;
  const Interval from_w3{std::min(a3, b3), std::max(a3, b3)};
  // w2 = lambda v^2/2 - mu/(2 lambda)  =>  v^2 in [(2 w2 + mu/lambda)/lambda]
  double s1 = (2.0 * box.w[0].lo + p.mu / l) / l;
  double s2 = (2.0 * box.w[0].hi + p.mu / l) / l;
  if (s1 > s2) std::swap(s1, s2);
  if (s2 < 0.0) return {};
  const double r1 = std::sqrt(std::max(s1, 0.0)), r2 = std::sqrt(s2);
  std::vector<Interval> from_w2{{-r2, -r1}, {r1, r2}};
  return intersect(normalize_intervals(from_w2), {from_w3});
}

}  // namespace

Complex euclidean_ft4(const TestFunction4& f, const std::array<double, 4>& xi) { return f.fourier4(xi); }

std::array<double, 3> frequency_curve(const RepParams& p, double v) {
  const double l = p.lambda;
  return {0.5 * l * v * v - p.mu / (2.0 * l), -l * v, l};
}

KNSymbol lambda_mu_symbol(const TestFunction4& f, const RepParams& p) {
  return KNSymbol::from_function([f, p](double v, double xi) {
    const auto w = frequency_curve(p, v);
    return kTwoPi * kTwoPi * f.fourier4({xi, w[0], w[1], w[2]});
  });
}

Complex gft_direct(const TestFunction4& f, const RepParams& p, const Wavepacket& h, double u, const DirectOptions& opt) {
  // Phase of pi(x) at v is linear in (x2, x3, x4): theta = c(v) . y.
  auto phase_coefficients = [&](double v) {
    Eigen::Vector3d c;
    for (int k = 0; k < 3; ++k) {
      Point e = Point::identity();
      e[k + 1] = 1.0;
      c(k) = representation_phase(p, e, v);
    }
    return c;
  };

  struct TermData {
    Eigen::Matrix3d ayy;
    Eigen::Vector3d a1y;
    double a11;
    Vector4cd b;
    Complex c;
    std::vector<std::pair<int, MonomialTerm>> poly;  // x1 power and y-monomial
  };
  std::vector<TermData> data;
  for (const auto& t : f.terms()) {
    TermData d;
    const Matrix4d a = t.quadratic().real();
    d.ayy = a.bottomRightCorner<3, 3>();
    d.a1y = a.block<3, 1>(1, 0);
    d.a11 = a(0, 0);
    d.b = t.linear();
    d.c = t.constant();
    for (const auto& [e, coeff] : t.poly().terms()) d.poly.push_back({e[0], MonomialTerm{{e[1], e[2], e[3]}, coeff}});
    data.push_back(std::move(d));
  }

  // Also accumulates sum |term| into `scale`, the rounding scale of the result.
  auto evaluate = [&](double x1, double* scale) {
    const double v = u - x1;
    const Eigen::Vector3d c = phase_coefficients(v);
    const Complex hv = h(v);
    Complex sum = 0.0;
    for (const auto& d : data) {
      Eigen::Vector3cd j;
      for (int k = 0; k < 3; ++k) j(k) = d.b(k + 1) - x1 * d.a1y(k) - Complex(0.0, c(k));
      std::vector<MonomialTerm> poly;
      for (const auto& [power, m] : d.poly) poly.push_back({m.exponent, m.coefficient * std::pow(x1, power)});
      const Complex term = std::exp(-0.5 * d.a11 * x1 * x1 + d.b(0) * x1 + d.c) * gaussian_integral(poly, d.ayy, j);
      if (scale) *scale += std::abs(term * hv);
      sum += term;
    }
    return sum * hv;
  };
  auto integrand = [&](double x1) { return evaluate(x1, nullptr); };

  // x1 window: the support of f in x1 intersected with u - supp(h).
  const auto box = f.spatial_box(opt.window_sigmas);
  const double ra = h.a().real();
  const double hc = -h.b().real() / (2.0 * ra), hs = 1.0 / std::sqrt(-2.0 * ra);
  const Interval hwin{u - hc - opt.window_sigmas * hs, u - hc + opt.window_sigmas * hs};
  const auto windows = intersect({box[0]}, {hwin});
  if (windows.empty()) return 0.0;
  AdaptiveOptions ao;
  ao.rel_tol = opt.rel_tol;
  ao.order = opt.order;
  ao.initial_panels = 4;
  // Cancelling terms: stop at the rounding level of int sum |term|.
  double mass = 0.0;
  for (const auto& w : windows)
    mass += integrate_fixed<double>(
        [&](double x1) {
          double scale = 0.0;
          evaluate(x1, &scale);
          return scale;
        },
        w.lo, w.hi, 8, opt.order);
  ao.abs_tol = 1e-14 * mass;
  return integrate_adaptive<Complex>(integrand, std::span<const Interval>(windows), ao).value;
}

GridOperator gft_via_symbol(const TestFunction4& f, const RepParams& p, const Grid1D& grid, const XiQuadrature& xi) {
  return kn_quantize(lambda_mu_symbol(f, p), grid, xi);
}

double KernelConvention::value() const { return constant != 0.0 ? constant : std::pow(kTwoPi, 1.5); }

Complex kernel(const TestFunction4& f, const RepParams& p, double u, double v, const KernelConvention& conv) {
  const auto w = frequency_curve(p, v);
  return conv.value() * f.fourier3(conv.sign * (u - v), w[0], w[1], w[2]);
}

GridOperator gft_via_kernel(const TestFunction4& f, const RepParams& p, const Grid1D& grid,
                            const KernelConvention& conv) {
  return GridOperator::from_kernel(grid, [&](double u, double v) { return kernel(f, p, u, v, conv); });
}

std::vector<Interval> frequency_v_windows(const TestFunction4& f, const RepParams& p, double sigmas) {
  std::vector<Interval> out;
  for (const auto& box : f.term_supports(sigmas)) {
    const auto w = term_frequency_windows(box, p);
    out.insert(out.end(), w.begin(), w.end());
  }
  return normalize_intervals(std::move(out));
}

std::vector<Interval> kernel_v_windows(const TestFunction4& f, const RepParams& p, double u, double sigmas) {
  std::vector<Interval> out;
  for (const auto& box : f.term_supports(sigmas)) {
    const auto w = term_frequency_windows(box, p);
    const Interval shift{u - box.x1.hi, u - box.x1.lo};
    const auto both = intersect(w, {shift});
    out.insert(out.end(), both.begin(), both.end());
  }
  return normalize_intervals(std::move(out));
}

namespace {

Complex apply_with_sign(const TestFunction4& f, const RepParams& p, const Wavepacket& h, double u,
                        const KernelConvention& conv, double rel_tol) {
  std::vector<Interval> windows;
  for (const auto& box : f.term_supports(9.0)) {
    const auto w = term_frequency_windows(box, p);
    // sign * (u - v) in the x1 window
    const Interval shift = conv.sign > 0 ? Interval{u - box.x1.hi, u - box.x1.lo} : Interval{u + box.x1.lo, u + box.x1.hi};
    const auto both = intersect(w, {shift});
    windows.insert(windows.end(), both.begin(), both.end());
  }
  windows = normalize_intervals(std::move(windows));
  if (windows.empty()) return 0.0;
  AdaptiveOptions ao;
  ao.rel_tol = rel_tol;
  ao.order = 20;
  ao.initial_panels = 4;
  return integrate_adaptive<Complex>([&](double v) { return kernel(f, p, u, v, conv) * h(v); },
                                     std::span<const Interval>(windows), ao)
      .value;
}

}  // namespace

Complex kernel_apply(const TestFunction4& f, const RepParams& p, const Wavepacket& h, double u,
                     const KernelConvention& conv, double rel_tol) {
  return apply_with_sign(f, p, h, u, conv, rel_tol);
}

KernelCalibration calibrate_kernel(const TestFunction4& f, const RepParams& p, const Wavepacket& h,
                                   const std::vector<double>& samples) {
  if (samples.empty()) throw std::invalid_argument("calibrate_kernel: no sample points");
  std::vector<Complex> direct;
  for (double u : samples) direct.push_back(gft_direct(f, p, h, u));
  double direct_norm = 0.0;
  for (const auto& d : direct) direct_norm += std::norm(d);
  direct_norm = std::sqrt(direct_norm);

  auto fit = [&](int sign, Complex& constant) {
    KernelConvention unit{sign, 1.0};
    std::vector<Complex> base;
    for (double u : samples) base.push_back(apply_with_sign(f, p, h, u, unit, 1e-12));
    Complex num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < base.size(); ++k) {
      num += std::conj(base[k]) * direct[k];
      den += std::norm(base[k]);
    }
    constant = den > 0.0 ? num / den : Complex(0.0);
    double res = 0.0;
    for (std::size_t k = 0; k < base.size(); ++k) res += std::norm(direct[k] - constant * base[k]);
    return direct_norm > 0.0 ? std::sqrt(res) / direct_norm : std::sqrt(res);
  };

  KernelCalibration out;
  Complex c_plus, c_minus;
  out.residual_plus = fit(1, c_plus);
  out.residual_minus = fit(-1, c_minus);
  out.sign = out.residual_plus <= out.residual_minus ? 1 : -1;
  out.fitted_constant = out.sign > 0 ? c_plus : c_minus;
  out.reference_constant = std::pow(kTwoPi, 1.5);
  return out;
}

namespace {

Poly4 determinant(const std::vector<std::vector<Poly4>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly4 det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly4>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly4> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Poly4 term = m[0][c] * determinant(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

}  // namespace

JacobianReport change_of_variables_jacobian() {
  const Poly4 u = Poly4::variable(0), v = Poly4::variable(1), l = Poly4::variable(2), mu = Poly4::variable(3);
  const Poly4 inv_l = Poly4::monomial({0, 0, -1, 0}, Rational(1));
  const Poly4 half(make_rational(1, 2));
  const std::array<Poly4, 4> w{u - v, half * l * v * v - half * mu * inv_l, -(l * v), l};
  std::vector<std::vector<Poly4>> jac(4, std::vector<Poly4>(4));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) jac[r][c] = w[r].derivative(static_cast<int>(c));
  JacobianReport out;
  out.determinant = determinant(jac);
  out.constant = out.determinant.is_constant();
  out.absolute_value = abs(out.determinant.coefficient({0, 0, 0, 0}));
  return out;
}

Complex group_convolution(const TestFunction4& first, const TestFunction4& second, const Point& x,
                          const TensorQuadrature& q) {
  CallableFunction4 g{[&](const Point& y) { return first(y) * second(multiply(inverse(y), x)); }, first.spatial_box()};
  return integrate_quadrature(g, q);
}

}  // namespace engel
