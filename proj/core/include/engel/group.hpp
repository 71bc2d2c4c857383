#pragma once

// Engel group B4: R^4 with the polynomial group law
//   x o y = (x1+y1, x2+y2, x3+y3-x1*y2, x4+y4+x1^2*y2/2-x1*y3).
// Every routine is templated on the scalar so that the same code runs on
// exact rationals, doubles, and symbolic polynomials.

#include <array>
#include <stdexcept>
#include <type_traits>

#include "engel/rational.hpp"

namespace engel {

template <typename T>
T scalar_ratio(long num, long den) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(num) / static_cast<T>(den);
  } else {
    return T(make_rational(num, den));
  }
}

template <typename T>
struct GroupElement {
  T x1{}, x2{}, x3{}, x4{};

  static GroupElement identity() { return {T(0), T(0), T(0), T(0)}; }

  const T& operator[](int i) const {
    switch (i) {
      case 0: return x1;
      case 1: return x2;
      case 2: return x3;
      default: return x4;
    }
  }
  T& operator[](int i) {
    return const_cast<T&>(static_cast<const GroupElement&>(*this)[i]);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
  }
};

using Point = GroupElement<double>;
using ExactPoint = GroupElement<Rational>;

template <typename T>
using Matrix4 = std::array<std::array<T, 4>, 4>;

template <typename T>
GroupElement<T> multiply(const GroupElement<T>& x, const GroupElement<T>& y) {
  const T half = scalar_ratio<T>(1, 2);
  return {x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3 - x.x1 * y.x2,
          x.x4 + y.x4 + half * x.x1 * x.x1 * y.x2 - x.x1 * y.x3};
}

template <typename T>
GroupElement<T> inverse(const GroupElement<T>& x) {
  const T half = scalar_ratio<T>(1, 2);
  return {-x.x1, -x.x2, -x.x3 - x.x1 * x.x2,
          -x.x4 - half * x.x1 * x.x1 * x.x2 - x.x1 * x.x3};
}

// delta_lambda(x) = (l x1, l x2, l^2 x3, l^3 x4); an automorphism for l > 0.
template <typename T>
GroupElement<T> dilate(const T& lambda, const GroupElement<T>& x) {
  if (!(lambda > T(0))) throw std::invalid_argument("dilate: lambda must be positive");
  return {lambda * x.x1, lambda * x.x2, lambda * lambda * x.x3,
          lambda * lambda * lambda * x.x4};
}

// Jacobian at y = 0 of y -> x o y.
template <typename T>
Matrix4<T> jacobian_left_translation(const GroupElement<T>& x) {
  const T zero(0), one(1);
  const T half = scalar_ratio<T>(1, 2);
  return {{{one, zero, zero, zero},
           {zero, one, zero, zero},
           {zero, -x.x1, one, zero},
           {zero, half * x.x1 * x.x1, -x.x1, one}}};
}

// Jacobian at y = 0 of y -> y o x.
template <typename T>
Matrix4<T> jacobian_right_translation(const GroupElement<T>& x) {
  const T zero(0), one(1);
  return {{{one, zero, zero, zero},
           {zero, one, zero, zero},
           {-x.x2, zero, one, zero},
           {-x.x3, zero, zero, one}}};
}

inline Point to_double(const ExactPoint& x) {
  return {x.x1.get_d(), x.x2.get_d(), x.x3.get_d(), x.x4.get_d()};
}

// exp(t X_i) in the polynomial coordinates: the point t e_i.
inline Point axis_point(int i, double t) {
  Point p = Point::identity();
  p[i] = t;
  return p;
}

}  // namespace engel
