#include <gtest/gtest.h>

#include <sstream>

#include "engel/symbol.hpp"

using namespace engel;

namespace {

const Grid1D& grid() {
  static const Grid1D g(10.0, 64);
  return g;
}

TestFunction4 unit_gaussian() { return TestFunction4::gaussian({1.0, 1.0, 1.0, 1.0}); }

}  // namespace

TEST(MultiIndex, HomogeneousDegree) {
  EXPECT_EQ(homogeneous_degree({0, 0, 0, 0}), 0);
  EXPECT_EQ(homogeneous_degree({1, 1, 0, 0}), 2);
  EXPECT_EQ(homogeneous_degree({0, 0, 1, 0}), 2);
  EXPECT_EQ(homogeneous_degree({0, 0, 0, 1}), 3);
  EXPECT_EQ(homogeneous_degree({2, 1, 1, 1}), 8);
}

TEST(MultiIndex, EnumerationByDegree) {
  EXPECT_EQ(multi_indices_up_to(0).size(), 1u);
  EXPECT_EQ(multi_indices_up_to(1).size(), 3u);
  EXPECT_EQ(multi_indices_up_to(2).size(), 7u);
  EXPECT_EQ(multi_indices_up_to(3).size(), 14u);
  const auto all = multi_indices_up_to(4);
  for (std::size_t k = 1; k < all.size(); ++k)
    EXPECT_LE(homogeneous_degree(all[k - 1]), homogeneous_degree(all[k]));
  EXPECT_THROW(homogeneous_degree({-1, 0, 0, 0}), std::invalid_argument);
}

TEST(SymbolField, IdentityIsExact) {
  const SymbolField id = SymbolField::identity();
  const RepParams p(1.0, 0.0);
  EXPECT_EQ(id(Point::identity(), p, grid()).matrix(), GridOperator::identity(grid()).matrix());
  EXPECT_EQ(id.delta({1, 0, 0, 0}, Point::identity(), p, grid()).matrix().norm(), 0.0);
  EXPECT_THROW(id.kernel_at(Point::identity()), std::logic_error);
}

TEST(SymbolField, OperatorFamilyHasNoDifferences) {
  const SymbolField s = SymbolField::operator_family(
      [](const Point&, const RepParams& p, const Grid1D& g) { return sublaplacian_image(p, g); });
  EXPECT_THROW(s.delta({1, 0, 0, 0}, Point::identity(), RepParams(1.0, 0.0), grid()), std::invalid_argument);
  EXPECT_NO_THROW(s.delta({0, 0, 0, 0}, Point::identity(), RepParams(1.0, 0.0), grid()));
}

TEST(Seminorm, IdentityHasOrderZero) {
  SeminormSpec spec;
  spec.a = spec.b = spec.c = 1;
  spec.params = {RepParams(1.0, 0.0), RepParams(-2.0, 1.0)};
  const SeminormResult r = seminorm(SymbolField::identity(), spec, grid());
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_EQ(r.rows.size(), 2u * 3u * 3u * 2u);
}

TEST(Seminorm, SublaplacianPowerHasItsOrder) {
  // sigma = I - pi(L) belongs to S^2 with seminorm 1 at alpha = beta = 0.
  const SymbolField s = SymbolField::operator_family([](const Point&, const RepParams& p, const Grid1D& g) {
    return GridOperator::identity(g) - sublaplacian_image(p, g);
  });
  SeminormSpec spec;
  spec.m = 2.0;
  spec.c = 2;
  const SeminormResult r = seminorm(s, spec, grid());
  EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(Seminorm, GrowsWithTheCaps) {
  const SymbolField s = SymbolField::constant_kernel(unit_gaussian());
  double last = 0.0;
  for (int cap = 0; cap <= 1; ++cap) {
    SeminormSpec spec;
    spec.a = spec.c = cap;
    const double v = seminorm(s, spec, grid()).value;
    EXPECT_GE(v, last);
    last = v;
  }
  EXPECT_GT(last, 0.0);
}

TEST(Seminorm, CsvHasHeaderAndOneLinePerRow) {
  SeminormSpec spec;
  spec.a = 1;
  const SeminormResult r = seminorm(SymbolField::identity(), spec, grid());
  const std::string csv = seminorm_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha1,alpha2,alpha3,alpha4,beta1,beta2,beta3,beta4,gamma,x1,x2,x3,x4,lambda,mu,value\r");
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, r.rows.size());
}

TEST(Seminorm, RejectsBadParameters) {
  SeminormSpec spec;
  spec.rho = 0.5;
  spec.delta = 0.5;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.delta = 0.0;
  spec.xs.clear();
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(XDerivative, LeftInvariantFieldsOnAScalarFamily) {
  // F(x) = f(x) I, so X^beta F = (X^beta f) I.
  const TestFunction4 f = TestFunction4::gaussian({1.0, 0.7, 1.3, 0.9}, {0.2, -0.1, 0.3, 0.0});
  const Grid1D g(2.0, 16);
  auto field = [&](const Point& y) { return f(y) * GridOperator::identity(g); };
  const Point x{0.3, -0.4, 0.2, 0.5};
  const auto gens = left_invariant_generators();
  for (int j = 0; j < 4; ++j) {
    Exponent beta{0, 0, 0, 0};
    beta[static_cast<std::size_t>(j)] = 1;
    const Complex want = f.apply(gens[static_cast<std::size_t>(j)])(x);
    const Complex got = x_derivative(field, beta, x).matrix()(0, 0);
    EXPECT_LT(std::abs(got - want), 1e-9) << "X" << j + 1;
  }
  const Complex second = x_derivative(field, {1, 1, 0, 0}, x).matrix()(0, 0);
  const Complex want2 = f.apply(gens[1]).apply(gens[0])(x);
  EXPECT_LT(std::abs(second - want2), 1e-6);
}

TEST(Traces, ClosedFormMuIntegralMatchesMuQuadrature) {
  const TestFunction4 g = unit_gaussian();
  const TestFunction4 f = TestFunction4::gaussian({1.5, 0.8, 1.2, 2.0}, {0.3, -0.2, 0.1, 0.4});
  const double lambda = 0.9;
  const Point x{0.2, -0.1, 0.3, 0.1};
  const Interval ms = mu_support(f, lambda);
  const auto r = integrate_adaptive<Complex>(
      [&](double mu) { return trace_translate_product(g, f, RepParams(lambda, mu), x); }, ms.lo, ms.hi,
      AdaptiveOptions{.abs_tol = 0.0, .rel_tol = 1e-9});
  const Complex closed = mu_integrated_trace(g, f, lambda, x);
  EXPECT_LT(std::abs(closed - r.value), 1e-6 * std::abs(closed));
}

TEST(Traces, TraceIsLinear) {
  const TestFunction4 f = unit_gaussian();
  const TestFunction4 g = TestFunction4::gaussian({1.5, 0.8, 1.2, 2.0}, {0.3, -0.2, 0.1, 0.4});
  const RepParams p(1.1, 0.4);
  const Point x{0.1, 0.2, -0.3, 0.4};
  const Complex lhs = trace_translate(Complex(2.0) * f + Complex(0.0, 1.0) * g, p, x);
  const Complex rhs = 2.0 * trace_translate(f, p, x) + Complex(0.0, 1.0) * trace_translate(g, p, x);
  EXPECT_LT(std::abs(lhs - rhs), 1e-8 * std::abs(rhs));
}
