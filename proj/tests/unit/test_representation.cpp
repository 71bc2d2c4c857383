#include <gtest/gtest.h>

#include <random>

#include "engel/representation.hpp"

using namespace engel;

namespace {

double max_relative(const Wavepacket& a, const Wavepacket& b) {
  double diff = 0.0, scale = 0.0;
  for (double u = -4.0; u <= 4.0; u += 0.25) {
    diff = std::max(diff, std::abs(a(u) - b(u)));
    scale = std::max(scale, std::abs(b(u)));
  }
  return diff / scale;
}

}  // namespace

TEST(Representation, PhaseMatchesClosedForm) {
  const RepParams p(2.0, 3.0);
  const Point x{0.5, -1.0, 0.25, 2.0};
  const double u = 0.7;
  const double want = -3.0 * -1.0 / 4.0 + 2.0 * 2.0 - 2.0 * 0.25 * u + 0.5 * 2.0 * -1.0 * u * u;
  EXPECT_DOUBLE_EQ(representation_phase(p, x, u), want);
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.1, 0.4);
  const Complex got = pi_apply(p, x, h)(u);
  EXPECT_LT(std::abs(got - std::exp(Complex(0.0, want)) * h(u + 0.5)), 1e-14);
}

TEST(Representation, RejectsZeroLambda) { EXPECT_THROW(RepParams(0.0, 1.0), std::invalid_argument); }

TEST(Representation, HomomorphismAndUnitarity) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  for (int s = 0; s < 100; ++s) {
    const RepParams p(c(rng) > 0 ? 0.5 + std::abs(c(rng)) : -0.5 - std::abs(c(rng)), c(rng));
    Point x, y;
    for (int i = 0; i < 4; ++i) x[i] = c(rng);
    for (int i = 0; i < 4; ++i) y[i] = c(rng);
    const Wavepacket h(Complex(-0.8, c(rng)), Complex(c(rng), c(rng)), 0.0);
    const Wavepacket lhs = pi_apply(p, multiply(x, y), h);
    const Wavepacket rhs = pi_apply(p, x, pi_apply(p, y, h));
    ASSERT_LT(max_relative(lhs, rhs), 1e-10);
    ASSERT_NEAR(pi_apply(p, x, h).norm(), h.norm(), 1e-10 * h.norm());
  }
}

TEST(Representation, IdentityAndInverse) {
  const RepParams p(-1.3, 0.4);
  const Wavepacket h = Wavepacket::gaussian(0.8, -0.2, 1.0);
  const Point x{0.3, -0.6, 1.2, -0.4};
  EXPECT_LT(max_relative(pi_apply(p, Point::identity(), h), h), 1e-15);
  EXPECT_LT(max_relative(pi_apply(p, inverse(x), pi_apply(p, x, h)), h), 1e-12);
}

TEST(Representation, GridOperatorMatchesExactAction) {
  const Grid1D grid(10.0, 128);
  const RepParams p(1.5, -0.5);
  const Point x{0.8, 0.3, -0.2, 0.6};
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.0, 0.5);
  const ComplexVector got = pi_grid(p, x, grid).apply(h.sample(grid));
  const Wavepacket want = pi_apply(p, x, h);
  for (int k = 0; k < grid.size(); ++k) {
    if (std::abs(grid.point(k)) > 5.0) continue;
    EXPECT_LT(std::abs(got(k) - want(grid.point(k))), 1e-10);
  }
}

TEST(Representation, InfinitesimalGeneratorsByCentralDifferences) {
  const RepParams p(-0.9, 1.7);
  const Wavepacket h(Complex(-0.6, 0.2), Complex(0.3, -0.4), 0.0);
  for (int i = 1; i <= 4; ++i) {
    const PolyWavepacket exact = pi_infinitesimal_apply(p, i, PolyWavepacket(h));
    auto residual = [&](double t) {
      double r = 0.0;
      for (double u = -3.0; u <= 3.0; u += 0.5) {
        const Complex fd = (pi_apply(p, axis_point(i - 1, t), h)(u) - pi_apply(p, axis_point(i - 1, -t), h)(u)) / (2 * t);
        r = std::max(r, std::abs(fd - exact(u)));
      }
      return r;
    };
    const double ratio = residual(0.02) / residual(0.01);
    EXPECT_NEAR(ratio, 4.0, 0.8) << "X" << i;
    EXPECT_LT(residual(1e-4), 1e-6) << "X" << i;
  }
}

TEST(Representation, GeneratorSymbols) {
  const RepParams p(2.0, 1.0);
  const double u = 0.6, xi = -1.3;
  EXPECT_LT(std::abs(infinitesimal_symbol(p, 1)(u, xi) - Complex(0.0, xi)), 1e-15);
  EXPECT_LT(std::abs(infinitesimal_symbol(p, 2)(u, xi) - Complex(0.0, 2.0 * u * u / 2 - 1.0 / 4.0)), 1e-15);
  EXPECT_LT(std::abs(infinitesimal_symbol(p, 3)(u, xi) - Complex(0.0, -2.0 * u)), 1e-15);
  EXPECT_LT(std::abs(infinitesimal_symbol(p, 4)(u, xi) - Complex(0.0, 2.0)), 1e-15);
}

TEST(Representation, GeneratorImagesSatisfyBracketRelations) {
  // d pi is a Lie algebra homomorphism for the reversed bracket:
  // pi(X2) pi(X1) - pi(X1) pi(X2) = pi(X3).
  const Grid1D grid(8.0, 96);
  const RepParams p(1.2, 0.7);
  const GridOperator x1 = pi_infinitesimal(p, 1, grid).op, x2 = pi_infinitesimal(p, 2, grid).op;
  const GridOperator x3 = pi_infinitesimal(p, 3, grid).op, x4 = pi_infinitesimal(p, 4, grid).op;
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.2, 0.0);
  const ComplexVector v = h.sample(grid);
  auto err = [&](const GridOperator& a, const GridOperator& b) {
    const ComplexVector d = a.apply(v) - b.apply(v);
    double e = 0.0;
    for (int k = 0; k < grid.size(); ++k)
      if (std::abs(grid.point(k)) < 4.0) e = std::max(e, std::abs(d(k)));
    return e;
  };
  EXPECT_LT(err(x2 * x1 - x1 * x2, x3), 1e-8);
  EXPECT_LT(err(x3 * x1 - x1 * x3, x4), 1e-8);
  EXPECT_LT(err(x3 * x2 - x2 * x3, GridOperator::zero(grid)), 1e-8);
}

TEST(Representation, SublaplacianIsSumOfSquares) {
  const Grid1D grid(8.0, 96);
  const RepParams p(-0.8, 0.5);
  const GridOperator x1 = pi_infinitesimal(p, 1, grid).op, x2 = pi_infinitesimal(p, 2, grid).op;
  const GridOperator l = sublaplacian_image(p, grid);
  const ComplexVector v = Wavepacket::gaussian(1.0, 0.0, 0.3).sample(grid);
  const ComplexVector d = (x1 * x1 + x2 * x2).apply(v) - l.apply(v);
  double e = 0.0;
  for (int k = 0; k < grid.size(); ++k)
    if (std::abs(grid.point(k)) < 4.0) e = std::max(e, std::abs(d(k)));
  EXPECT_LT(e, 1e-8);
  EXPECT_LT(hermitian_defect(l), 1e-9);
  EXPECT_GE(hermitian_eigenvalues(GridOperator::identity(grid) - l).minCoeff(), 1.0 - 1e-9);
}
