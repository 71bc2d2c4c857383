#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "engel/diff_op.hpp"
#include "engel/gaussian_integral.hpp"
#include "engel/group.hpp"
#include "engel/quadrature.hpp"

namespace engel {

// Search windows for |F3 f(x1, w)| where F3 is the Fourier transform in
// (x2, x3, x4). Outside the box the modulus is below ~exp(-sigmas^2 / 2)
// relative to its peak.
struct SupportBox {
  Interval x1;
  std::array<Interval, 3> w;  // w2, w3, w4
};

// Finite sum of polynomial-times-Gaussian terms on R^4 with real positive
// definite quadratic forms. Closed under multiplication by polynomials,
// polynomial differential operators and left translation.
class TestFunction4 {
 public:
  TestFunction4() = default;
  explicit TestFunction4(std::vector<GaussianForm> terms);

  // exp(-1/2 sum_i precision_i (x_i - shift_i)^2 + i modulation . x)
  static TestFunction4 gaussian(const std::array<double, 4>& precision, const std::array<double, 4>& shift = {},
                                const std::array<double, 4>& modulation = {});
  // exp(-1/2 x^T A x + b^T x + c), A real SPD.
  static TestFunction4 general(const Matrix4d& a, const Vector4cd& b, Complex c = 0.0);
  // Unit-mass Gaussian of width eps in every coordinate.
  static TestFunction4 delta_approximant(double eps);

  const std::vector<GaussianForm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex operator()(const Point& x) const;

  TestFunction4 operator+(const TestFunction4& o) const;
  TestFunction4 operator-(const TestFunction4& o) const;
  friend TestFunction4 operator*(Complex s, const TestFunction4& f);
  TestFunction4 times(const ComplexPoly4& p) const;
  TestFunction4 times(const Poly4& p) const;
  // x^alpha f
  TestFunction4 times_monomial(const Exponent& alpha) const;
  TestFunction4 apply(const PolyDiffOp& op) const;
  // y -> f(x o y)
  TestFunction4 left_translate(const Point& x) const;

  int max_degree() const;

  // Euclidean Fourier transforms, normalised by (2 pi)^{-k/2}.
  Complex fourier4(const std::array<double, 4>& xi) const;
  // F3 f(x1, w2, w3, w4).
  Complex fourier3(double x1, double w2, double w3, double w4) const;
  const std::vector<GaussianForm>& fourier4_terms() const { return cache_->f4; }
  const std::vector<GaussianForm>& fourier3_terms() const { return cache_->f3; }

  SupportBox support(double sigmas = 9.0) const;
  // Per-term windows (the hull of these is support()).
  std::vector<SupportBox> term_supports(double sigmas = 9.0) const;
  // Box outside which |f| is negligible, for direct quadrature in x.
  std::array<Interval, 4> spatial_box(double sigmas = 9.0) const;

 private:
  struct Cache {
    std::vector<GaussianForm> f4;
    std::vector<GaussianForm> f3;
  };

  std::vector<GaussianForm> terms_;
  std::shared_ptr<const Cache> cache_;
};

Complex inner_product(const TestFunction4& f, const TestFunction4& g);
double l2_norm_squared(const TestFunction4& f);
Complex integral(const TestFunction4& f);

// Opt-in fallback for arbitrary integrable functions: tensor Gauss-Legendre
// quadrature on a box.
struct CallableFunction4 {
  std::function<Complex(const Point&)> f;
  std::array<Interval, 4> box;
};

struct TensorQuadrature {
  int panels = 4;
  int order = 10;
};

Complex euclidean_ft4_quadrature(const CallableFunction4& f, const std::array<double, 4>& xi,
                                 const TensorQuadrature& q = {});
Complex integrate_quadrature(const CallableFunction4& f, const TensorQuadrature& q = {});

}  // namespace engel
