#include "engel/gaussian_integral.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace engel {

GaussianForm::GaussianForm(ComplexPoly4 poly, Matrix4cd quadratic, Vector4cd linear, Complex constant)
    : poly_(std::move(poly)),
      quadratic_(0.5 * (quadratic + quadratic.transpose())),
      linear_(std::move(linear)),
      constant_(constant) {
  for (const auto& [e, c] : poly_.terms()) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (e[k] < 0) throw std::invalid_argument("GaussianForm: negative exponent in prefactor");
      max_degree_[k] = std::max(max_degree_[k], e[k]);
    }
    flat_.push_back({e, c});
  }
}

Complex GaussianForm::exponent(const std::array<double, 4>& z) const {
  const Vector4cd v(z[0], z[1], z[2], z[3]);
  return -0.5 * v.dot(quadratic_ * v) + v.dot(linear_) + constant_;
}

Complex GaussianForm::prefactor(const std::array<double, 4>& z) const {
  if (flat_.size() == 1 && max_degree_ == std::array<int, 4>{0, 0, 0, 0}) return flat_.front().c;
  std::array<std::array<double, 16>, 4> pw{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (max_degree_[k] >= 16) throw std::invalid_argument("GaussianForm: prefactor degree too large");
    pw[k][0] = 1.0;
    for (int n = 1; n <= max_degree_[k]; ++n) pw[k][static_cast<std::size_t>(n)] = pw[k][static_cast<std::size_t>(n - 1)] * z[k];
  }
  Complex sum = 0.0;
  for (const auto& t : flat_) {
    sum += t.c * (pw[0][static_cast<std::size_t>(t.e[0])] * pw[1][static_cast<std::size_t>(t.e[1])] *
                  pw[2][static_cast<std::size_t>(t.e[2])] * pw[3][static_cast<std::size_t>(t.e[3])]);
  }
  return sum;
}

GaussianForm GaussianForm::conjugate() const {
  return {poly_.map_coefficients<Complex>([](const Complex& c) { return std::conj(c); }), quadratic_.conjugate(),
          linear_.conjugate(), std::conj(constant_)};
}

GaussianForm GaussianForm::with_poly(ComplexPoly4 poly) const {
  return {std::move(poly), quadratic_, linear_, constant_};
}

GaussianForm operator*(const GaussianForm& a, const GaussianForm& b) {
  return {a.poly_ * b.poly_, a.quadratic_ + b.quadratic_, a.linear_ + b.linear_, a.constant_ + b.constant_};
}

bool GaussianForm::is_integrable() const {
  const double scale = std::max(1.0, quadratic_.norm());
  if (quadratic_.imag().norm() > 1e-12 * scale) return false;
  Eigen::LLT<Matrix4d> llt(quadratic_.real());
  return llt.info() == Eigen::Success;
}

Complex gaussian_moment(const std::vector<Complex>& mean, const Eigen::MatrixXd& cov, const std::vector<int>& gamma) {
  std::map<std::vector<int>, Complex> memo;
  const std::size_t n = mean.size();
  auto rec = [&](auto&& self, const std::vector<int>& g) -> Complex {
    std::size_t k = 0;
    while (k < n && g[k] == 0) ++k;
    if (k == n) return 1.0;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::vector<int> h = g;
    h[k] -= 1;
    Complex value = mean[k] * self(self, h);
    for (std::size_t j = 0; j < n; ++j) {
      if (h[j] == 0) continue;
      std::vector<int> hh = h;
      hh[j] -= 1;
      value += cov(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) * static_cast<double>(h[j]) * self(self, hh);
    }
    memo.emplace(g, value);
    return value;
  };
  if (gamma.size() != n) throw std::invalid_argument("gaussian_moment: dimension mismatch");
  return rec(rec, gamma);
}

Complex gaussian_integral(const std::vector<MonomialTerm>& poly, const Eigen::MatrixXd& m, const Eigen::VectorXcd& j) {
  const auto n = m.rows();
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gaussian_integral: matrix not positive definite");
  const Eigen::MatrixXd s = llt.solve(Eigen::MatrixXd::Identity(n, n));
  const Eigen::VectorXcd mean = s.cast<Complex>() * j;
  double logdet = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) logdet += 2.0 * std::log(llt.matrixL()(k, k));
  const Complex base = std::exp(0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi) - 0.5 * logdet +
                                0.5 * (j.transpose() * mean)(0));
  std::vector<Complex> mv(mean.data(), mean.data() + n);
  Complex sum = 0.0;
  for (const auto& t : poly) sum += t.coefficient * gaussian_moment(mv, s, t.exponent);
  return base * sum;
}

Complex integrate(const GaussianForm& f) {
  if (!f.is_integrable()) throw std::invalid_argument("integrate: quadratic form is not real positive definite");
  std::vector<MonomialTerm> poly;
  for (const auto& [e, c] : f.poly().terms()) poly.push_back({{e[0], e[1], e[2], e[3]}, c});
  const Eigen::MatrixXd m = f.quadratic().real();
  const Eigen::VectorXcd j = f.linear();
  return std::exp(f.constant()) * gaussian_integral(poly, m, j);
}

GaussianForm partial_fourier(const GaussianForm& f, const Mask4& transformed) {
  if (!f.is_integrable()) throw std::invalid_argument("partial_fourier: quadratic form is not real positive definite");
  std::vector<int> in, keep;
  for (int k = 0; k < 4; ++k) (transformed[static_cast<std::size_t>(k)] ? in : keep).push_back(k);
  if (in.empty()) return f;
  const auto ni = static_cast<Eigen::Index>(in.size());
  const Matrix4d a = f.quadratic().real();
  const Vector4cd& b = f.linear();

  Eigen::MatrixXd aii(ni, ni);
  Eigen::VectorXcd bi(ni);
  for (Eigen::Index r = 0; r < ni; ++r) {
    bi(r) = b(in[static_cast<std::size_t>(r)]);
    for (Eigen::Index s = 0; s < ni; ++s) aii(r, s) = a(in[static_cast<std::size_t>(r)], in[static_cast<std::size_t>(s)]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(aii);
  const Eigen::MatrixXd s = llt.solve(Eigen::MatrixXd::Identity(ni, ni));
  double logdet = 0.0;
  for (Eigen::Index k = 0; k < ni; ++k) logdet += 2.0 * std::log(llt.matrixL()(k, k));

  // J = b_I - G z with G(:, k) = A_{I,k} for kept k and G(r, I_r) = i.
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(ni, 4);
  for (Eigen::Index r = 0; r < ni; ++r) {
    for (int k : keep) g(r, k) = a(in[static_cast<std::size_t>(r)], k);
    g(r, in[static_cast<std::size_t>(r)]) = Complex(0.0, 1.0);
  }
  const Eigen::MatrixXcd sc = s.cast<Complex>();
  const Eigen::MatrixXcd sg = sc * g;
  const Eigen::VectorXcd sb = sc * bi;

  Matrix4cd q = -(g.transpose() * sg);
  Vector4cd l = -(g.transpose() * sb);
  for (int r : keep) {
    l(r) += b(r);
    for (int c : keep) q(r, c) += a(r, c);
  }
  const Complex constant = f.constant() + 0.5 * (bi.transpose() * sb)(0) - 0.5 * logdet;

  // Mean of the integrated coordinates as affine polynomials in z.
  std::vector<ComplexPoly4> mean(static_cast<std::size_t>(ni));
  for (Eigen::Index r = 0; r < ni; ++r) {
    ComplexPoly4 m(sb(r));
    for (int k = 0; k < 4; ++k) m += ComplexPoly4::monomial({k == 0, k == 1, k == 2, k == 3}, -sg(r, k));
    mean[static_cast<std::size_t>(r)] = std::move(m);
  }
  std::map<Exponent, ComplexPoly4> memo;
  auto moment = [&](auto&& self, const Exponent& gamma) -> ComplexPoly4 {
    int first = -1;
    for (Eigen::Index r = 0; r < ni; ++r)
      if (gamma[static_cast<std::size_t>(in[static_cast<std::size_t>(r)])] > 0) {
        first = static_cast<int>(r);
        break;
      }
    if (first < 0) return ComplexPoly4(Complex(1.0));
    if (auto it = memo.find(gamma); it != memo.end()) return it->second;
    Exponent h = gamma;
    h[static_cast<std::size_t>(in[static_cast<std::size_t>(first)])] -= 1;
    ComplexPoly4 value = mean[static_cast<std::size_t>(first)] * self(self, h);
    for (Eigen::Index r = 0; r < ni; ++r) {
      const auto slot = static_cast<std::size_t>(in[static_cast<std::size_t>(r)]);
      if (h[slot] == 0) continue;
      Exponent hh = h;
      hh[slot] -= 1;
      value += ComplexPoly4(Complex(s(first, r) * h[slot])) * self(self, hh);
    }
    memo.emplace(gamma, value);
    return value;
  };

  ComplexPoly4 poly;
  for (const auto& [e, c] : f.poly().terms()) {
    Exponent kept{0, 0, 0, 0}, integrated{0, 0, 0, 0};
    for (int k = 0; k < 4; ++k) (transformed[static_cast<std::size_t>(k)] ? integrated : kept)[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
    poly += ComplexPoly4::monomial(kept, c) * moment(moment, integrated);
  }
  return {std::move(poly), q, l, constant};
}

}  // namespace engel
