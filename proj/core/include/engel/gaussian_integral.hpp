#pragma once

// Polynomial-times-Gaussian forms in four variables and their exact
// integrals and partial Fourier transforms.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "engel/polynomial.hpp"

namespace engel {

using Complex = std::complex<double>;
using Vector4d = Eigen::Vector4d;
using Vector4cd = Eigen::Vector4cd;
using Matrix4d = Eigen::Matrix4d;
using Matrix4cd = Eigen::Matrix4cd;
using Mask4 = std::array<bool, 4>;

// P(z) exp(-1/2 z^T Q z + l^T z + c), Q complex symmetric.
class GaussianForm {
 public:
  GaussianForm(ComplexPoly4 poly, Matrix4cd quadratic, Vector4cd linear, Complex constant);

  const ComplexPoly4& poly() const { return poly_; }
  const Matrix4cd& quadratic() const { return quadratic_; }
  const Vector4cd& linear() const { return linear_; }
  Complex constant() const { return constant_; }

  Complex exponent(const std::array<double, 4>& z) const;
  Complex prefactor(const std::array<double, 4>& z) const;
  Complex operator()(const std::array<double, 4>& z) const { return prefactor(z) * std::exp(exponent(z)); }

  GaussianForm conjugate() const;
  GaussianForm with_poly(ComplexPoly4 poly) const;
  friend GaussianForm operator*(const GaussianForm& a, const GaussianForm& b);

  // True when Q is real (to rounding) and positive definite.
  bool is_integrable() const;

 private:
  struct FlatTerm {
    std::array<int, 4> e;
    Complex c;
  };

  ComplexPoly4 poly_;
  Matrix4cd quadratic_;
  Vector4cd linear_;
  Complex constant_;
  std::vector<FlatTerm> flat_;
  std::array<int, 4> max_degree_{};
};

// Exact integral over R^4; requires is_integrable().
Complex integrate(const GaussianForm& f);

// (2 pi)^{-k/2} int f(z) e^{-i sum_{j in I} w_j z_j} dz_I over the k
// coordinates flagged in `transformed`. The result lives in the same four
// slots with z_j replaced by w_j for j in I. Requires a real positive definite
// quadratic form.
GaussianForm partial_fourier(const GaussianForm& f, const Mask4& transformed);

// E[Y^gamma] for Y ~ N(mean, cov), numerically, gamma of length n.
Complex gaussian_moment(const std::vector<Complex>& mean, const Eigen::MatrixXd& cov, const std::vector<int>& gamma);

// int P(y) exp(-1/2 y^T M y + J^T y) dy over R^n, M real SPD. P is given as
// exponent/coefficient pairs in n variables.
struct MonomialTerm {
  std::vector<int> exponent;
  Complex coefficient;
};
Complex gaussian_integral(const std::vector<MonomialTerm>& poly, const Eigen::MatrixXd& m, const Eigen::VectorXcd& j);

}  // namespace engel
