#pragma once

// Sparse polynomial in four variables with exponents allowed to be negative
// (Laurent monomials are needed for change-of-variables Jacobians in lambda).
// Terms with zero coefficient are never stored, so structural equality is
// polynomial equality.

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "engel/rational.hpp"

namespace engel {

using Exponent = std::array<int, 4>;

namespace detail {
template <typename T>
bool is_zero(const T& c) {
  return c == T(0);
}
}  // namespace detail

template <typename T>
class Polynomial {
 public:
  using Coefficient = T;
  using TermMap = std::map<Exponent, T>;

  Polynomial() = default;
  Polynomial(T constant) { add_term({0, 0, 0, 0}, std::move(constant)); }  // NOLINT: implicit by design of the ring

  static Polynomial variable(int i) {
    Exponent e{0, 0, 0, 0};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e, T(1));
  }
  static Polynomial monomial(const Exponent& e, T c) {
    Polynomial p;
    p.add_term(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0, 0});
  }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
  }
  int degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(static_cast<std::size_t>(i)));
    return d;
  }

  void add_term(const Exponent& e, T c) {
    if (detail::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial derivative(int i) const {
    Polynomial out;
    const auto k = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponent f = e;
      f[k] -= 1;
      out.add_term(f, c * T(e[k]));
    }
    return out;
  }

  template <typename S>
  S evaluate(const std::array<S, 4>& x) const {
    S sum(0);
    for (const auto& [e, c] : terms_) {
      S term = to_scalar<S>(c);
      for (std::size_t k = 0; k < 4; ++k) term *= int_power(x[k], e[k]);
      sum += term;
    }
    return sum;
  }

  // Replace variable k by images[k].
  Polynomial substitute(const std::array<Polynomial, 4>& images) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      Polynomial term(c);
      for (std::size_t k = 0; k < 4; ++k) {
        if (e[k] < 0) throw std::domain_error("substitute: negative exponent");
        for (int j = 0; j < e[k]; ++j) term = term * images[k];
      }
      out += term;
    }
    return out;
  }

  template <typename U, typename F>
  Polynomial<U> map_coefficients(F&& f) const {
    Polynomial<U> out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::array<const char*, 4>& names = {"x1", "x2", "x3", "x4"}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (std::size_t k = 0; k < 4; ++k) {
        if (e[k] == 0) continue;
        os << "*" << names[k];
        if (e[k] != 1) os << "^" << e[k];
      }
    }
    return os.str();
  }

 private:
  template <typename S>
  static S int_power(const S& base, int n) {
    if (n < 0) return S(1) / int_power(base, -n);
    S r(1);
    for (int i = 0; i < n; ++i) r *= base;
    return r;
  }
  template <typename S>
  static S to_scalar(const T& c) {
    if constexpr (std::is_same_v<T, Rational> && !std::is_same_v<S, Rational>) {
      return S(c.get_d());
    } else {
      return S(c);
    }
  }

  TermMap terms_;
};

using Poly4 = Polynomial<Rational>;
using ComplexPoly4 = Polynomial<std::complex<double>>;

inline ComplexPoly4 to_complex(const Poly4& p) {
  return p.map_coefficients<std::complex<double>>(
      [](const Rational& c) { return std::complex<double>(c.get_d(), 0.0); });
}

}  // namespace engel
