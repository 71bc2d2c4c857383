#include <gtest/gtest.h>

#include <cmath>

#include "engel/heisenberg.hpp"

using namespace engel;

namespace {

LambdaSymbol example(double lambda) {
  return {[](double xi, double u) { return Complex(xi * xi + 3.0 * u, xi * u); }, lambda};
}

}  // namespace

TEST(Renormalization, UnitLambdaIsIdentity) {
  const PhaseFunction t = renormalize(example(1.0));
  for (double p : {-1.0, 0.3, 2.0})
    for (double q : {-0.5, 1.7}) EXPECT_EQ(t(p, q), example(1.0).a(p, q));
}

TEST(Renormalization, ScalesBothArguments) {
  const PhaseFunction t = renormalize(example(4.0));
  // a(p / 2, q / 2)
  EXPECT_LT(std::abs(t(2.0, 6.0) - example(4.0).a(1.0, 3.0)), 1e-15);
}

TEST(Renormalization, RoundTrip) {
  const LambdaSymbol a = example(2.7);
  const LambdaSymbol back = unrenormalize(renormalize(a), a.lambda);
  for (double xi : {-1.2, 0.4})
    for (double u : {-0.3, 2.2}) EXPECT_LT(std::abs(back.a(xi, u) - a.a(xi, u)), 1e-12 * (1.0 + std::abs(a.a(xi, u))));
}

TEST(Renormalization, NegativeLambdaIsUnsupported) {
  EXPECT_THROW(renormalize(example(-1.0)), std::domain_error);
  EXPECT_THROW(renormalize(example(0.0)), std::invalid_argument);
}

TEST(Dilation, SymbolDilation) {
  const KNSymbol a = KNSymbol::from_function([](double u, double xi) { return Complex(u * std::exp(-xi * xi)); });
  const KNSymbol d = dilate_symbol(a, 2.0);
  EXPECT_LT(std::abs(d(0.5, 3.0) - a(1.0, 1.5)), 1e-15);
  const KNSymbol h = dilate_symbol(harmonic_oscillator_symbol(), 0.5);
  EXPECT_LT(std::abs(h(2.0, 1.0) - Complex(1.0 + 4.0)), 1e-14);
}

TEST(Weyl, HarmonicOscillator) {
  const Grid1D grid(12.0, 256);
  const WeylReport r = weyl_roundtrip_check(harmonic_oscillator_symbol(), grid);
  EXPECT_TRUE(r.real_symbol);
  EXPECT_LT(r.hermitian_defect, 1e-10);
  ASSERT_GE(r.lowest_eigenvalues.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.lowest_eigenvalues[static_cast<std::size_t>(k)], 2 * k + 1, 1e-3);
  for (double d : r.dilation_residuals) EXPECT_LT(d, 1e-8);
}

TEST(Weyl, RealNonPolynomialSymbolIsSelfAdjoint) {
  const Grid1D grid(10.0, 128);
  const KNSymbol a = KNSymbol::from_function(
      [](double u, double xi) { return Complex(std::exp(-0.5 * u * u - 0.25 * xi * xi) * std::cos(u + xi)); });
  EXPECT_LT(hermitian_defect(weyl_quantize(a, grid)), 1e-10);
  EXPECT_LT(dilation_residual(a, grid, 1.5), 1e-6);
}
