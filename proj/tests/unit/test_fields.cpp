#include <gtest/gtest.h>

#include "engel/fields.hpp"

using namespace engel;

namespace {

Poly4 x(int i) { return Poly4::variable(i - 1); }
Poly4 c(long n, long d = 1) { return Poly4(make_rational(n, d)); }

std::array<Rational, 4> coords(long a, long b, long cc, long d) {
  return {Rational(a), Rational(b), Rational(cc), Rational(d)};
}

}  // namespace

TEST(Polynomial, ArithmeticAndDerivatives) {
  const Poly4 p = x(1) * x(1) * x(2) - c(3) * x(3) + c(1, 2);
  EXPECT_EQ(p.derivative(0), c(2) * x(1) * x(2));
  EXPECT_EQ(p.derivative(2), c(-3));
  EXPECT_EQ(p.evaluate<double>({2.0, 3.0, 1.0, 0.0}), 12.0 - 3.0 + 0.5);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.total_degree(), 3);
}

TEST(PolyDiffOp, ComposeAppliesRightFirst) {
  const PolyDiffOp d1 = PolyDiffOp::partial(0);
  const PolyDiffOp m = PolyDiffOp::multiplication(x(1));
  const Poly4 f = x(1) * x(2);
  // d1 (x1 f) = f + x1 d1 f
  EXPECT_EQ(compose(d1, m).apply(f), f + x(1) * f.derivative(0));
  EXPECT_EQ(compose(m, d1).apply(f), x(1) * f.derivative(0));
}

TEST(Generators, ExplicitCoefficients) {
  const auto g = left_invariant_generators();
  const auto c2 = g[1].first_order_coefficients();
  EXPECT_EQ(c2[0], c(0));
  EXPECT_EQ(c2[1], c(1));
  EXPECT_EQ(c2[2], -x(1));
  EXPECT_EQ(c2[3], c(1, 2) * x(1) * x(1));
  const auto r = right_invariant_generators();
  const auto r1 = r[0].first_order_coefficients();
  EXPECT_EQ(r1[2], -x(2));
  EXPECT_EQ(r1[3], -x(3));
}

TEST(Generators, LeftAndRightInvariance) {
  const auto left = left_invariant_generators();
  const auto right = right_invariant_generators();
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(verify_left_invariance(left[static_cast<std::size_t>(i)]).invariant) << "X" << i + 1;
    EXPECT_TRUE(verify_right_invariance(right[static_cast<std::size_t>(i)]).invariant) << "X~" << i + 1;
  }
  // X2 is not right-invariant and X~1 is not left-invariant.
  EXPECT_FALSE(verify_right_invariance(left[1]).invariant);
  const auto bad = verify_left_invariance(right[0]);
  EXPECT_FALSE(bad.invariant);
  bool nonzero = false;
  for (const auto& r : bad.residual) nonzero = nonzero || !r.is_zero();
  EXPECT_TRUE(nonzero);
}

TEST(Generators, LeftAndRightCommute) {
  for (const auto& a : left_invariant_generators())
    for (const auto& b : right_invariant_generators()) EXPECT_TRUE(commutator(a, b).is_zero());
}

TEST(Brackets, ReversedConventionAndStandardCommutator) {
  const auto g = left_invariant_generators();
  // [X, Y] := Y X - X Y
  EXPECT_EQ(bracket(g[0], g[1]), g[2]);
  EXPECT_EQ(bracket(g[0], g[2]), g[3]);
  // X1 X2 - X2 X1 = -X3
  PolyDiffOp minus_x3;
  minus_x3 -= g[2];
  EXPECT_EQ(commutator(g[0], g[1]), minus_x3);
  EXPECT_TRUE(bracket(g[1], g[2]).is_zero());
  EXPECT_TRUE(bracket(g[0], g[3]).is_zero());
  EXPECT_TRUE(bracket(g[2], g[3]).is_zero());
}

TEST(Brackets, DecomposeRejectsFieldsOutsideTheAlgebra) {
  const auto g = left_invariant_generators();
  const Decomposition d = decompose(g[1] + g[3]);
  EXPECT_TRUE(d.in_algebra);
  EXPECT_EQ(d.coordinates, coords(0, 1, 0, 1));
  EXPECT_FALSE(decompose(x(1) * PolyDiffOp::partial(0)).in_algebra);
}

TEST(Gradation, ThreeStepStratifiedAlgebra) {
  const GradationReport r = verify_gradation();
  EXPECT_TRUE(r.graded);
  EXPECT_TRUE(r.jacobi);
  EXPECT_TRUE(r.antisymmetric);
  EXPECT_TRUE(r.hormander);
  EXPECT_EQ(r.lower_central_dims, (std::vector<int>{4, 2, 1, 0}));
  EXPECT_EQ(r.steps, 3);
  EXPECT_TRUE(r.failures.empty());
  ASSERT_EQ(r.brackets.size(), 6u);  // pairs i < j
  for (const auto& b : r.brackets) {
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(b.standard[k], -b.reversed[k]);
  }
  EXPECT_EQ(generator_weight(0), 1);
  EXPECT_EQ(generator_weight(2), 2);
  EXPECT_EQ(generator_weight(3), 3);
}
