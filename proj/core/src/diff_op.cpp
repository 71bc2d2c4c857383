#include "engel/diff_op.hpp"

#include <sstream>

namespace engel {

namespace {

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

PolyDiffOp PolyDiffOp::identity() { return multiplication(Poly4(Rational(1))); }

PolyDiffOp PolyDiffOp::partial(int i) {
  PolyDiffOp op;
  Exponent d{0, 0, 0, 0};
  d.at(static_cast<std::size_t>(i)) = 1;
  op.add_term(d, Poly4(Rational(1)));
  return op;
}

PolyDiffOp PolyDiffOp::multiplication(const Poly4& p) {
  PolyDiffOp op;
  op.add_term({0, 0, 0, 0}, p);
  return op;
}

PolyDiffOp PolyDiffOp::vector_field(const std::array<Poly4, 4>& coefficients) {
  PolyDiffOp op;
  for (int i = 0; i < 4; ++i) {
    Exponent d{0, 0, 0, 0};
    d[static_cast<std::size_t>(i)] = 1;
    op.add_term(d, coefficients[static_cast<std::size_t>(i)]);
  }
  return op;
}

int PolyDiffOp::order() const {
  int n = 0;
  for (const auto& [d, c] : terms_) n = std::max(n, d[0] + d[1] + d[2] + d[3]);
  return n;
}

Poly4 PolyDiffOp::coefficient(const Exponent& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Poly4() : it->second;
}

std::array<Poly4, 4> PolyDiffOp::first_order_coefficients() const {
  std::array<Poly4, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    Exponent d{0, 0, 0, 0};
    d[i] = 1;
    out[i] = coefficient(d);
  }
  return out;
}

void PolyDiffOp::add_term(const Exponent& d, const Poly4& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly4 partial_derivative(const Poly4& p, const Exponent& e) {
  Poly4 out = p;
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j) out = out.derivative(k);
  }
  return out;
}

Poly4 PolyDiffOp::apply(const Poly4& f) const {
  Poly4 out;
  for (const auto& [d, c] : terms_) out += c * partial_derivative(f, d);
  return out;
}

PolyDiffOp& PolyDiffOp::operator+=(const PolyDiffOp& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

PolyDiffOp& PolyDiffOp::operator-=(const PolyDiffOp& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

PolyDiffOp operator*(const Poly4& c, const PolyDiffOp& a) {
  PolyDiffOp out;
  for (const auto& [d, coef] : a.terms_) out.add_term(d, c * coef);
  return out;
}

std::string PolyDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    for (std::size_t k = 0; k < 4; ++k) {
      if (d[k] == 0) continue;
      os << "*d" << (k + 1);
      if (d[k] != 1) os << "^" << d[k];
    }
  }
  return os.str();
}

// A(B f) = sum_a a_a d^a (sum_b b_b d^b f)
//        = sum_a sum_b sum_{g <= a} C(a,g) a_a (d^g b_b) d^{a-g+b} f.
PolyDiffOp compose(const PolyDiffOp& a, const PolyDiffOp& b) {
  PolyDiffOp out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      for (int g0 = 0; g0 <= da[0]; ++g0)
        for (int g1 = 0; g1 <= da[1]; ++g1)
          for (int g2 = 0; g2 <= da[2]; ++g2)
            for (int g3 = 0; g3 <= da[3]; ++g3) {
              const Exponent g{g0, g1, g2, g3};
              Rational mult(1);
              for (std::size_t k = 0; k < 4; ++k) mult *= binomial(da[k], g[k]);
              Poly4 coef = ca * partial_derivative(cb, g) * Poly4(mult);
              Exponent d{};
              for (std::size_t k = 0; k < 4; ++k) d[k] = da[k] - g[k] + db[k];
              out.add_term(d, coef);
            }
    }
  }
  return out;
}

PolyDiffOp bracket(const PolyDiffOp& a, const PolyDiffOp& b) { return compose(b, a) - compose(a, b); }

PolyDiffOp commutator(const PolyDiffOp& a, const PolyDiffOp& b) { return compose(a, b) - compose(b, a); }

}  // namespace engel
