#pragma once

#include <array>
#include <map>
#include <string>

#include "engel/polynomial.hpp"

namespace engel {

// Differential operator sum_d c_d(x) d^d with polynomial coefficients, keyed by
// the derivative multi-index d = (d1,d2,d3,d4).
class PolyDiffOp {
 public:
  using TermMap = std::map<Exponent, Poly4>;

  PolyDiffOp() = default;

  static PolyDiffOp identity();
  static PolyDiffOp partial(int i);
  static PolyDiffOp multiplication(const Poly4& p);
  // sum_i coefficients[i] * d_i
  static PolyDiffOp vector_field(const std::array<Poly4, 4>& coefficients);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  Poly4 coefficient(const Exponent& d) const;
  // Coefficients of d_1..d_4 (the first-order part).
  std::array<Poly4, 4> first_order_coefficients() const;

  void add_term(const Exponent& d, const Poly4& c);

  Poly4 apply(const Poly4& f) const;

  PolyDiffOp& operator+=(const PolyDiffOp& o);
  PolyDiffOp& operator-=(const PolyDiffOp& o);
  friend PolyDiffOp operator+(PolyDiffOp a, const PolyDiffOp& b) { return a += b; }
  friend PolyDiffOp operator-(PolyDiffOp a, const PolyDiffOp& b) { return a -= b; }
  friend PolyDiffOp operator*(const Poly4& c, const PolyDiffOp& a);
  friend bool operator==(const PolyDiffOp& a, const PolyDiffOp& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

// (compose(A, B)) f = A(B f).
PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b);

// Lie bracket with the reversed convention [X, Y] := Y X - X Y.
PolyDiffOp bracket(const PolyDiffOp& a, const PolyDiffOp& b);

// Ordinary commutator X Y - Y X, reported alongside for comparison.
PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b);

// d^e p for a derivative multi-index e.
Poly4 partial_derivative(const Poly4& p, const Exponent& e);

}  // namespace engel
