#include "engel/fields.hpp"

#include <algorithm>

namespace engel {

namespace {

Poly4 var(int i) { return Poly4::variable(i); }
Poly4 cst(long n, long d = 1) { return Poly4(make_rational(n, d)); }

GroupElement<Poly4> lift(const ExactPoint& x) {
  return {Poly4(x.x1), Poly4(x.x2), Poly4(x.x3), Poly4(x.x4)};
}
GroupElement<Poly4> symbols() { return {var(0), var(1), var(2), var(3)}; }

Matrix4<Rational> jacobian_at_zero(const GroupElement<Poly4>& image) {
  Matrix4<Rational> j{};
  const std::array<Rational, 4> origin{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          image[r].derivative(c).evaluate(origin);
  return j;
}

// Row-reduced basis of the span of a set of rational 4-vectors.
std::vector<std::array<Rational, 4>> basis(std::vector<std::array<Rational, 4>> rows) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t k = 0; k < 4; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank(const std::vector<std::array<Rational, 4>>& rows) { return static_cast<int>(basis(rows).size()); }

PolyDiffOp combination(const std::array<Rational, 4>& c) {
  const auto gens = left_invariant_generators();
  PolyDiffOp out;
  for (std::size_t i = 0; i < 4; ++i) out += Poly4(c[i]) * gens[i];
  return out;
}

// Basis (as coordinate vectors) of [A, B] for spans A, B.
std::vector<std::array<Rational, 4>> bracket_span(const std::vector<std::array<Rational, 4>>& a,
                                                  const std::vector<std::array<Rational, 4>>& b) {
  std::vector<std::array<Rational, 4>> out;
  for (const auto& u : a)
    for (const auto& v : b) {
      auto d = decompose(bracket(combination(u), combination(v)));
      if (d.in_algebra) out.push_back(d.coordinates);
    }
  return basis(std::move(out));
}

InvarianceReport check_invariance(const PolyDiffOp& field, const Matrix4<Poly4>& jac) {
  InvarianceReport rep;
  const auto coef = field.first_order_coefficients();
  const std::array<Rational, 4> origin{Rational(0), Rational(0), Rational(0), Rational(0)};
  std::array<Rational, 4> at_zero;
  for (std::size_t i = 0; i < 4; ++i) at_zero[i] = coef[i].evaluate(origin);
  rep.invariant = field.order() <= 1 && field.coefficient({0, 0, 0, 0}).is_zero();
  for (std::size_t r = 0; r < 4; ++r) {
    Poly4 expected;
    for (std::size_t c = 0; c < 4; ++c) expected += jac[r][c] * Poly4(at_zero[c]);
    rep.residual[r] = coef[r] - expected;
    if (!rep.residual[r].is_zero()) rep.invariant = false;
  }
  return rep;
}

}  // namespace

int generator_weight(int i) {
  static constexpr std::array<int, 4> w{1, 1, 2, 3};
  return w.at(static_cast<std::size_t>(i));
}

std::array<PolyDiffOp, 4> left_invariant_generators() {
  return {PolyDiffOp::vector_field({cst(1), Poly4(), Poly4(), Poly4()}),
          PolyDiffOp::vector_field({Poly4(), cst(1), -var(0), cst(1, 2) * var(0) * var(0)}),
          PolyDiffOp::vector_field({Poly4(), Poly4(), cst(1), -var(0)}),
          PolyDiffOp::vector_field({Poly4(), Poly4(), Poly4(), cst(1)})};
}

std::array<PolyDiffOp, 4> right_invariant_generators() {
  return {PolyDiffOp::vector_field({cst(1), Poly4(), -var(1), -var(2)}), PolyDiffOp::partial(1),
          PolyDiffOp::partial(2), PolyDiffOp::partial(3)};
}

Matrix4<Poly4> symbolic_left_jacobian() {
  // The law is affine in y, so column c is exactly (x o e_c) - (x o 0).
  Matrix4<Poly4> j{};
  const auto x = symbols();
  for (int c = 0; c < 4; ++c) {
    GroupElement<Poly4> e{Poly4(), Poly4(), Poly4(), Poly4()};
    e[c] = cst(1);
    const auto with = multiply(x, e);
    const auto without = multiply(x, GroupElement<Poly4>{Poly4(), Poly4(), Poly4(), Poly4()});
    for (int r = 0; r < 4; ++r)
      j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = with[r] - without[r];
  }
  return j;
}

Matrix4<Poly4> symbolic_right_jacobian() {
  // t -> (t e_c) o x is quadratic in t, so its derivative at 0 is
  // 4 f(1/2) - f(1) - 3 f(0), exactly.
  Matrix4<Poly4> j{};
  const auto x = symbols();
  for (int c = 0; c < 4; ++c) {
    auto at = [&](long n, long d) {
      GroupElement<Poly4> y{Poly4(), Poly4(), Poly4(), Poly4()};
      y[c] = cst(n, d);
      return multiply(y, x);
    };
    const auto f0 = at(0, 1), fh = at(1, 2), f1 = at(1, 1);
    for (int r = 0; r < 4; ++r)
      j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          cst(4) * fh[r] - f1[r] - cst(3) * f0[r];
  }
  return j;
}

Matrix4<Rational> differentiated_left_jacobian(const ExactPoint& x) {
  return jacobian_at_zero(multiply(lift(x), symbols()));
}

Matrix4<Rational> differentiated_right_jacobian(const ExactPoint& x) {
  return jacobian_at_zero(multiply(symbols(), lift(x)));
}

InvarianceReport verify_left_invariance(const PolyDiffOp& field) {
  return check_invariance(field, symbolic_left_jacobian());
}

InvarianceReport verify_right_invariance(const PolyDiffOp& field) {
  return check_invariance(field, symbolic_right_jacobian());
}

Decomposition decompose(const PolyDiffOp& field) {
  Decomposition d;
  const std::array<Rational, 4> origin{Rational(0), Rational(0), Rational(0), Rational(0)};
  const auto coef = field.first_order_coefficients();
  for (std::size_t i = 0; i < 4; ++i) d.coordinates[i] = coef[i].evaluate(origin);
  d.in_algebra = combination(d.coordinates) == field;
  return d;
}

GradationReport verify_gradation() {
  GradationReport rep;
  const auto gens = left_invariant_generators();
  std::array<std::array<Rational, 4>, 4> unit{};
  for (std::size_t i = 0; i < 4; ++i) {
    unit[i] = {Rational(0), Rational(0), Rational(0), Rational(0)};
    unit[i][i] = 1;
  }

  rep.graded = true;
  rep.antisymmetric = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& xi = gens[static_cast<std::size_t>(i)];
      const auto& xj = gens[static_cast<std::size_t>(j)];
      const auto rev = decompose(bracket(xi, xj));
      const auto std_ = decompose(commutator(xi, xj));
      BracketEntry e{i + 1, j + 1, rev.coordinates, std_.coordinates};
      rep.brackets.push_back(e);
      if (!rev.in_algebra) {
        rep.graded = false;
        rep.failures.push_back("bracket leaves the algebra");
      }
      if (!(bracket(xi, xj) + bracket(xj, xi)).is_zero()) rep.antisymmetric = false;
      const int target = generator_weight(i) + generator_weight(j);
      for (int k = 0; k < 4; ++k) {
        if (rev.coordinates[static_cast<std::size_t>(k)] != 0 && generator_weight(k) != target) {
          rep.graded = false;
          rep.failures.push_back("[X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) +
                                 "] has a component outside V_" + std::to_string(target));
        }
      }
    }
  }

  rep.jacobi = true;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        const auto sum = bracket(gens[a], bracket(gens[b], gens[c])) +
                         bracket(gens[b], bracket(gens[c], gens[a])) +
                         bracket(gens[c], bracket(gens[a], gens[b]));
        if (!sum.is_zero()) rep.jacobi = false;
      }

  std::vector<std::array<Rational, 4>> whole(unit.begin(), unit.end());
  std::vector<std::array<Rational, 4>> current = whole;
  rep.lower_central_dims.push_back(rank(current));
  while (rep.lower_central_dims.back() > 0 && rep.lower_central_dims.size() < 8) {
    current = bracket_span(whole, current);
    rep.lower_central_dims.push_back(rank(current));
  }
  rep.steps = static_cast<int>(rep.lower_central_dims.size()) - 1;

  // Hormander: iterated brackets of X1, X2.
  std::vector<std::array<Rational, 4>> generated{unit[0], unit[1]};
  for (int depth = 0; depth < 4; ++depth) {
    auto more = bracket_span(generated, generated);
    generated.insert(generated.end(), more.begin(), more.end());
    generated = basis(std::move(generated));
  }
  rep.hormander = rank(generated) == 4;
  return rep;
}

}  // namespace engel
