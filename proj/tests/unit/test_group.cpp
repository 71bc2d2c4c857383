#include <gtest/gtest.h>

#include <random>

#include "engel/fields.hpp"
#include "engel/group.hpp"

using namespace engel;

namespace {

ExactPoint q(long a, long b, long c, long d, long den = 1) {
  return {make_rational(a, den), make_rational(b, den), make_rational(c, den), make_rational(d, den)};
}

ExactPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  ExactPoint p;
  for (int i = 0; i < 4; ++i) {
    const long n = num(rng);
    p[i] = make_rational(n, den(rng));
  }
  return p;
}

}  // namespace

TEST(GroupLaw, HandComputedProduct) {
  // x = (1, 2, 3, 4), y = (2, -1, 1, 3):
  // x3 + y3 - x1 y2 = 3 + 1 + 1 = 5; x4 + y4 + x1^2 y2 / 2 - x1 y3 = 4 + 3 - 1/2 - 1 = 11/2.
  const ExactPoint z = multiply(q(1, 2, 3, 4), q(2, -1, 1, 3));
  EXPECT_EQ(z, (ExactPoint{3, 1, 5, make_rational(11, 2)}));
}

TEST(GroupLaw, NonCommutative) {
  const ExactPoint x = q(1, 0, 0, 0), y = q(0, 1, 0, 0);
  EXPECT_FALSE(multiply(x, y) == multiply(y, x));
  // The commutator x y x^-1 y^-1 lands in the centre direction and x3.
  const ExactPoint c = multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
  EXPECT_EQ(c.x1, 0);
  EXPECT_EQ(c.x2, 0);
  EXPECT_NE(c.x3, 0);
}

TEST(GroupLaw, AssociativityIdentityInverseExact) {
  std::mt19937_64 rng(11);
  const ExactPoint e = ExactPoint::identity();
  for (int s = 0; s < 200; ++s) {
    const ExactPoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    ASSERT_EQ(multiply(x, e), x);
    ASSERT_EQ(multiply(e, x), x);
    ASSERT_EQ(multiply(x, inverse(x)), e);
    ASSERT_EQ(multiply(inverse(x), x), e);
    ASSERT_EQ(inverse(inverse(x)), x);
    ASSERT_EQ(inverse(multiply(x, y)), multiply(inverse(y), inverse(x)));
  }
}

TEST(GroupLaw, SymbolicAssociativity) {
  // The law on generic polynomial points, so associativity holds identically.
  using P = GroupElement<Poly4>;
  auto v = [](int i) { return Poly4::variable(i); };
  const P x{v(0), v(1), v(2), v(3)};
  const P y{v(1) * v(2), v(0), v(3) - v(1), v(2) * v(2)};
  const P z{v(3), v(0) * v(1), v(1), v(0)};
  EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
  EXPECT_EQ(multiply(x, inverse(x)), P::identity());
}

TEST(GroupLaw, DilationsAreAutomorphisms) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 50; ++s) {
    const ExactPoint x = random_point(rng), y = random_point(rng);
    const Rational r = make_rational(s + 1, 3);
    ASSERT_EQ(dilate(r, multiply(x, y)), multiply(dilate(r, x), dilate(r, y)));
  }
  EXPECT_THROW(dilate(Rational(0), q(1, 1, 1, 1)), std::invalid_argument);
  EXPECT_THROW(dilate(-1.0, Point{1, 1, 1, 1}), std::invalid_argument);
}

TEST(GroupLaw, DoubleAndExactAgree) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 20; ++s) {
    const ExactPoint x = random_point(rng), y = random_point(rng);
    const Point zd = multiply(to_double(x), to_double(y));
    const Point ze = to_double(multiply(x, y));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(zd[i], ze[i], 1e-12 * (1.0 + std::abs(ze[i])));
  }
}

TEST(Jacobian, ClosedFormMatchesDifferentiatedLaw) {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 50; ++s) {
    const ExactPoint x = random_point(rng);
    ASSERT_EQ(differentiated_left_jacobian(x), jacobian_left_translation(x));
    ASSERT_EQ(differentiated_right_jacobian(x), jacobian_right_translation(x));
  }
  const GroupElement<Poly4> generic{Poly4::variable(0), Poly4::variable(1), Poly4::variable(2), Poly4::variable(3)};
  EXPECT_EQ(symbolic_left_jacobian(), jacobian_left_translation(generic));
  EXPECT_EQ(symbolic_right_jacobian(), jacobian_right_translation(generic));
}

TEST(Jacobian, CentralDifferenceOracle) {
  const Point x{0.7, -1.1, 0.4, 2.0};
  const auto jl = jacobian_left_translation(x);
  const auto jr = jacobian_right_translation(x);
  const double h = 1e-5;
  for (int c = 0; c < 4; ++c) {
    const Point plus = axis_point(c, h), minus = axis_point(c, -h);
    const Point lp = multiply(x, plus), lm = multiply(x, minus);
    const Point rp = multiply(plus, x), rm = multiply(minus, x);
    for (int r = 0; r < 4; ++r) {
      EXPECT_NEAR((lp[r] - lm[r]) / (2 * h), jl[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], 1e-8);
      EXPECT_NEAR((rp[r] - rm[r]) / (2 * h), jr[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], 1e-8);
    }
  }
}

TEST(Jacobian, UnimodularTranslations) {
  // Lower-triangular with unit diagonal: Lebesgue measure is bi-invariant.
  const auto j = jacobian_left_translation(q(3, -2, 5, 1, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(j[i][i], 1);
    for (std::size_t k = i + 1; k < 4; ++k) EXPECT_EQ(j[i][k], 0);
  }
}
