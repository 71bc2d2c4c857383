#include "engel/test_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace engel {

namespace {

std::array<double, 4> as_array(const Point& x) { return {x.x1, x.x2, x.x3, x.x4}; }

GaussianForm differentiate(const GaussianForm& t, int i) {
  // d_i (P e^E) = (d_i P + P d_i E) e^E with d_i E = l_i - (Q z)_i.
  ComplexPoly4 dexp(t.linear()(i));
  for (int j = 0; j < 4; ++j) dexp += ComplexPoly4::monomial({j == 0, j == 1, j == 2, j == 3}, -t.quadratic()(i, j));
  return t.with_poly(t.poly().derivative(i) + t.poly() * dexp);
}

}  // namespace

TestFunction4::TestFunction4(std::vector<GaussianForm> terms) : terms_(std::move(terms)) {
  auto cache = std::make_shared<Cache>();
  for (const auto& t : terms_) {
    if (!t.is_integrable()) throw std::invalid_argument("TestFunction4: term is not integrable");
    cache->f4.push_back(partial_fourier(t, {true, true, true, true}));
    cache->f3.push_back(partial_fourier(t, {false, true, true, true}));
  }
  cache_ = std::move(cache);
}

TestFunction4 TestFunction4::gaussian(const std::array<double, 4>& precision, const std::array<double, 4>& shift,
                                      const std::array<double, 4>& modulation) {
  Matrix4cd q = Matrix4cd::Zero();
  Vector4cd l;
  Complex c = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto u = static_cast<std::size_t>(k);
    if (!(precision[u] > 0.0)) throw std::invalid_argument("TestFunction4::gaussian: precisions must be positive");
    q(k, k) = precision[u];
    l(k) = Complex(precision[u] * shift[u], modulation[u]);
    c -= 0.5 * precision[u] * shift[u] * shift[u];
  }
  return TestFunction4({GaussianForm(ComplexPoly4(Complex(1.0)), q, l, c)});
}

TestFunction4 TestFunction4::general(const Matrix4d& a, const Vector4cd& b, Complex c) {
  return TestFunction4({GaussianForm(ComplexPoly4(Complex(1.0)), a.cast<Complex>(), b, c)});
}

TestFunction4 TestFunction4::delta_approximant(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("delta_approximant: width must be positive");
  const double p = 1.0 / (eps * eps);
  TestFunction4 g = gaussian({p, p, p, p});
  return Complex(std::pow(2.0 * std::numbers::pi * eps * eps, -2.0)) * g;
}

Complex TestFunction4::operator()(const Point& x) const {
  const auto z = as_array(x);
  Complex sum = 0.0;
  for (const auto& t : terms_) sum += t(z);
  return sum;
}

TestFunction4 TestFunction4::operator+(const TestFunction4& o) const {
  std::vector<GaussianForm> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return TestFunction4(std::move(terms));
}

TestFunction4 TestFunction4::operator-(const TestFunction4& o) const { return *this + Complex(-1.0) * o; }

TestFunction4 operator*(Complex s, const TestFunction4& f) {
  std::vector<GaussianForm> terms;
  if (s == Complex(0.0)) return TestFunction4(std::move(terms));
  for (const auto& t : f.terms_) terms.push_back(t.with_poly(ComplexPoly4(s) * t.poly()));
  return TestFunction4(std::move(terms));
}

TestFunction4 TestFunction4::times(const ComplexPoly4& p) const {
  std::vector<GaussianForm> terms;
  for (const auto& t : terms_) {
    ComplexPoly4 q = p * t.poly();
    if (!q.is_zero()) terms.push_back(t.with_poly(std::move(q)));
  }
  return TestFunction4(std::move(terms));
}

TestFunction4 TestFunction4::times(const Poly4& p) const { return times(to_complex(p)); }

TestFunction4 TestFunction4::times_monomial(const Exponent& alpha) const {
  return times(ComplexPoly4::monomial(alpha, Complex(1.0)));
}

TestFunction4 TestFunction4::apply(const PolyDiffOp& op) const {
  std::vector<GaussianForm> terms;
  for (const auto& [d, coeff] : op.terms()) {
    const ComplexPoly4 c = to_complex(coeff);
    for (const auto& t : terms_) {
      GaussianForm g = t;
      for (int i = 0; i < 4; ++i)
        for (int r = 0; r < d[static_cast<std::size_t>(i)]; ++r) g = differentiate(g, i);
      ComplexPoly4 q = c * g.poly();
      if (!q.is_zero()) terms.push_back(g.with_poly(std::move(q)));
    }
  }
  return TestFunction4(std::move(terms));
}

TestFunction4 TestFunction4::left_translate(const Point& x) const {
  // x o y = x + L y with L the left-translation Jacobian (affine in y).
  const auto jac = jacobian_left_translation(x);
  Matrix4d lmat;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) lmat(r, c) = jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  const Vector4d x0(x.x1, x.x2, x.x3, x.x4);
  std::array<ComplexPoly4, 4> images;
  for (int r = 0; r < 4; ++r) {
    ComplexPoly4 img(Complex(x0(r)));
    for (int c = 0; c < 4; ++c) img += ComplexPoly4::monomial({c == 0, c == 1, c == 2, c == 3}, Complex(lmat(r, c)));
    images[static_cast<std::size_t>(r)] = std::move(img);
  }
  const Matrix4cd lc = lmat.cast<Complex>();
  const Vector4cd xc = x0.cast<Complex>();
  std::vector<GaussianForm> terms;
  for (const auto& t : terms_) {
    const Matrix4cd& q = t.quadratic();
    const Vector4cd& l = t.linear();
    terms.emplace_back(t.poly().substitute(images), lc.transpose() * q * lc, lc.transpose() * (l - q * xc),
                       t.constant() - 0.5 * xc.dot(q * xc) + xc.dot(l));
  }
  return TestFunction4(std::move(terms));
}

int TestFunction4::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.poly().total_degree());
  return d;
}

Complex TestFunction4::fourier4(const std::array<double, 4>& xi) const {
  Complex sum = 0.0;
  for (const auto& t : cache_->f4) sum += t(xi);
  return sum;
}

Complex TestFunction4::fourier3(double x1, double w2, double w3, double w4) const {
  Complex sum = 0.0;
  const std::array<double, 4> z{x1, w2, w3, w4};
  for (const auto& t : cache_->f3) sum += t(z);
  return sum;
}

std::vector<SupportBox> TestFunction4::term_supports(double sigmas) const {
  std::vector<SupportBox> out;
  for (const auto& t : terms_) {
    const Matrix4d a = t.quadratic().real();
    const Vector4cd& b = t.linear();
    const Eigen::Matrix3d ayy = a.bottomRightCorner<3, 3>();
    const Eigen::Vector3d av = a.block<3, 1>(1, 0);
    const Eigen::Matrix3d s = ayy.inverse();
    const double prec = a(0, 0) - av.dot(s * av);
    const Eigen::Vector3d rb = b.tail<3>().real();
    const double center = (b(0).real() - av.dot(s * rb)) / prec;
    const double k = sigmas + t.poly().total_degree();
    SupportBox box;
    box.x1 = {center - k / std::sqrt(prec), center + k / std::sqrt(prec)};
    for (int i = 0; i < 3; ++i) {
      const double c = b(i + 1).imag();
      const double sd = std::sqrt(ayy(i, i));
      box.w[static_cast<std::size_t>(i)] = {c - k * sd, c + k * sd};
    }
    out.push_back(box);
  }
  return out;
}

SupportBox TestFunction4::support(double sigmas) const {
  const auto boxes = term_supports(sigmas);
  if (boxes.empty()) return {};
  SupportBox hull = boxes.front();
  for (const auto& b : boxes) {
    hull.x1 = {std::min(hull.x1.lo, b.x1.lo), std::max(hull.x1.hi, b.x1.hi)};
    for (std::size_t i = 0; i < 3; ++i)
      hull.w[i] = {std::min(hull.w[i].lo, b.w[i].lo), std::max(hull.w[i].hi, b.w[i].hi)};
  }
  return hull;
}

std::array<Interval, 4> TestFunction4::spatial_box(double sigmas) const {
  std::array<Interval, 4> box{};
  bool first = true;
  for (const auto& t : terms_) {
    const Matrix4d a = t.quadratic().real();
    const Matrix4d cov = a.inverse();
    const Vector4d center = cov * t.linear().real();
    const double k = sigmas + t.poly().total_degree();
    for (int i = 0; i < 4; ++i) {
      const double sd = std::sqrt(cov(i, i));
      const Interval iv{center(i) - k * sd, center(i) + k * sd};
      auto& slot = box[static_cast<std::size_t>(i)];
      slot = first ? iv : Interval{std::min(slot.lo, iv.lo), std::max(slot.hi, iv.hi)};
    }
    first = false;
  }
  return box;
}

Complex inner_product(const TestFunction4& f, const TestFunction4& g) {
  Complex sum = 0.0;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) sum += integrate(a.conjugate() * b);
  return sum;
}

double l2_norm_squared(const TestFunction4& f) { return inner_product(f, f).real(); }

Complex integral(const TestFunction4& f) {
  Complex sum = 0.0;
  for (const auto& t : f.terms()) sum += integrate(t);
  return sum;
}

namespace {

template <typename F>
Complex tensor_gl(const std::array<Interval, 4>& box, const TensorQuadrature& q, F&& f) {
  const auto& rule = gauss_legendre(q.order);
  std::array<std::vector<double>, 4> nodes, weights;
  for (std::size_t d = 0; d < 4; ++d) {
    const double w = box[d].length() / q.panels;
    for (int p = 0; p < q.panels; ++p) {
      const double mid = box[d].lo + (p + 0.5) * w;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        nodes[d].push_back(mid + 0.5 * w * rule.nodes[k]);
        weights[d].push_back(0.5 * w * rule.weights[k]);
      }
    }
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < nodes[0].size(); ++i)
    for (std::size_t j = 0; j < nodes[1].size(); ++j)
      for (std::size_t k = 0; k < nodes[2].size(); ++k) {
        Complex inner = 0.0;
        for (std::size_t l = 0; l < nodes[3].size(); ++l)
          inner += weights[3][l] * f(Point{nodes[0][i], nodes[1][j], nodes[2][k], nodes[3][l]});
        sum += weights[0][i] * weights[1][j] * weights[2][k] * inner;
      }
  return sum;
}

}  // namespace

Complex euclidean_ft4_quadrature(const CallableFunction4& f, const std::array<double, 4>& xi,
                                 const TensorQuadrature& q) {
  const double norm = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  return norm * tensor_gl(f.box, q, [&](const Point& x) {
           const double phase = -(x.x1 * xi[0] + x.x2 * xi[1] + x.x3 * xi[2] + x.x4 * xi[3]);
           return f.f(x) * std::polar(1.0, phase);
         });
}

Complex integrate_quadrature(const CallableFunction4& f, const TensorQuadrature& q) {
  return tensor_gl(f.box, q, f.f);
}

}  // namespace engel
