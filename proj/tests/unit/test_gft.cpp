#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "engel/gft.hpp"

using namespace engel;

namespace {

TestFunction4 shifted_gaussian() {
  return TestFunction4::gaussian({1.5, 0.8, 1.2, 2.0}, {0.3, -0.2, 0.1, 0.4}, {0.5, 0.0, -0.3, 0.2});
}

double route_error(const GridOperator& op, const TestFunction4& f, const RepParams& p, const Wavepacket& h) {
  const Grid1D& grid = op.grid();
  const ComplexVector applied = op.apply(h.sample(grid));
  double diff = 0.0, scale = 0.0;
  for (int k = 0; k < grid.size(); k += 2) {
    const double u = grid.point(k);
    if (std::abs(u) > 0.5 * grid.half_width()) continue;
    const Complex want = gft_direct(f, p, h, u);
    diff = std::max(diff, std::abs(applied(k) - want));
    scale = std::max(scale, std::abs(want));
  }
  return diff / scale;
}

}  // namespace

TEST(GroupFourier, FrequencyCurve) {
  const auto w = frequency_curve(RepParams(2.0, 3.0), 0.5);
  EXPECT_DOUBLE_EQ(w[0], 2.0 * 0.25 / 2 - 3.0 / 4.0);
  EXPECT_DOUBLE_EQ(w[1], -1.0);
  EXPECT_DOUBLE_EQ(w[2], 2.0);
}

TEST(GroupFourier, DirectIntegralMatchesBruteForceQuadrature) {
  // Oracle: tensor Gauss-Legendre over R^4 of f(x) (pi(x^{-1}) h)(u).
  const TestFunction4 f = TestFunction4::gaussian({2.0, 2.0, 2.0, 2.0}, {0.1, 0.0, -0.1, 0.0});
  const RepParams p(1.0, 0.5);
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.2, 0.3);
  const double u = 0.3;
  CallableFunction4 g{[&](const Point& x) { return f(x) * pi_apply(p, inverse(x), h)(u); }, f.spatial_box(8.0)};
  const Complex oracle = integrate_quadrature(g, {4, 12});
  const Complex direct = gft_direct(f, p, h, u);
  EXPECT_LT(std::abs(direct - oracle), 1e-8 * std::abs(oracle));
}

TEST(GroupFourier, SymbolAndKernelRoutesMatchDefiningIntegral) {
  const Grid1D grid(10.0, 128);
  const TestFunction4 f = shifted_gaussian();
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.2, 0.5);
  for (const RepParams& p : {RepParams(1.0, 0.0), RepParams(2.0, 3.0), RepParams(-1.0, 1.0)}) {
    EXPECT_LT(route_error(gft_via_symbol(f, p, grid), f, p, h), 1e-6) << p.lambda << " " << p.mu;
    EXPECT_LT(route_error(gft_via_kernel(f, p, grid), f, p, h), 1e-6) << p.lambda << " " << p.mu;
  }
}

TEST(GroupFourier, KernelApplyMatchesDirect) {
  const TestFunction4 f = shifted_gaussian();
  const RepParams p(-1.5, 0.7);
  const Wavepacket h = Wavepacket::gaussian(0.8, -0.3, 0.2);
  for (double u : {-1.0, 0.0, 0.6}) {
    const Complex want = gft_direct(f, p, h, u);
    EXPECT_LT(std::abs(kernel_apply(f, p, h, u) - want), 1e-9 * (1.0 + std::abs(want)));
  }
}

TEST(GroupFourier, CalibrationSelectsPlusSignAndReferenceConstant) {
  const KernelCalibration c =
      calibrate_kernel(shifted_gaussian(), RepParams(2.0, 3.0), Wavepacket::gaussian(1.0, 0.2, 0.5), {-1.0, -0.3, 0.4, 1.2});
  EXPECT_EQ(c.sign, 1);
  EXPECT_NEAR(c.reference_constant, std::pow(2.0 * std::numbers::pi, 1.5), 1e-12);
  EXPECT_LT(std::abs(c.fitted_constant - c.reference_constant), 1e-7 * c.reference_constant);
  EXPECT_LT(c.residual_plus, 1e-7);
  EXPECT_GT(c.residual_minus, 1e-3);
}

TEST(GroupFourier, ChangeOfVariablesJacobianIsOneHalf) {
  const JacobianReport j = change_of_variables_jacobian();
  EXPECT_TRUE(j.constant);
  EXPECT_EQ(j.absolute_value, make_rational(1, 2));
}

TEST(GroupFourier, LinearInTheFunction) {
  const Grid1D grid(8.0, 64);
  const RepParams p(1.3, -0.4);
  const TestFunction4 f = shifted_gaussian();
  const TestFunction4 g = TestFunction4::gaussian({1.0, 1.0, 1.0, 1.0});
  const GridOperator lhs = gft_via_kernel(Complex(2.0) * f + Complex(0.0, 1.0) * g, p, grid);
  const GridOperator rhs = Complex(2.0) * gft_via_kernel(f, p, grid) + Complex(0.0, 1.0) * gft_via_kernel(g, p, grid);
  EXPECT_LT(relative_hs_difference(lhs, rhs), 1e-13);
}

TEST(GroupFourier, TranslationActsByComposition) {
  // pi(f(x o .)) = pi(f) pi(x): the defining integral substituted y -> x o y.
  const RepParams p(1.0, 0.5);
  const TestFunction4 f = TestFunction4::gaussian({1.0, 1.0, 1.0, 1.0});
  const Point x{0.4, -0.3, 0.2, 0.1};
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.0, 0.0);
  const Wavepacket pxh = pi_apply(p, x, h);
  for (double u : {-0.5, 0.0, 0.8}) {
    const Complex lhs = gft_direct(f.left_translate(x), p, h, u);
    const Complex rhs = gft_direct(f, p, pxh, u);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * (1.0 + std::abs(rhs)));
  }
}
