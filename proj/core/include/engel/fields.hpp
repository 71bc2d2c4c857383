#pragma once

// The Lie algebra of B4 as exact polynomial vector fields.

#include <array>
#include <string>
#include <vector>

#include "engel/diff_op.hpp"
#include "engel/group.hpp"

namespace engel {

// X1 = d1, X2 = d2 - x1 d3 + x1^2/2 d4, X3 = d3 - x1 d4, X4 = d4.
std::array<PolyDiffOp, 4> left_invariant_generators();

// X~1 = d1 - x2 d3 - x3 d4, X~2 = d2, X~3 = d3, X~4 = d4.
std::array<PolyDiffOp, 4> right_invariant_generators();

// Symbolic Jacobians of y -> x o y and y -> y o x at y = 0, obtained by
// differentiating the group law itself (independent of the closed forms in
// group.hpp).
Matrix4<Poly4> symbolic_left_jacobian();
Matrix4<Poly4> symbolic_right_jacobian();
// Same, at a fixed rational point.
Matrix4<Rational> differentiated_left_jacobian(const ExactPoint& x);
Matrix4<Rational> differentiated_right_jacobian(const ExactPoint& x);

struct InvarianceReport {
  bool invariant = false;
  // residual[i] = coefficient_i(x) - (J(x) * coefficient(0))_i
  std::array<Poly4, 4> residual;
};

// Checks coefficient(x) == J_{tau_x}(0) * coefficient(0) as a polynomial identity.
InvarianceReport verify_left_invariance(const PolyDiffOp& field);
// Same with the Jacobian of right translation.
InvarianceReport verify_right_invariance(const PolyDiffOp& field);

// Coordinates of a field in the basis X1..X4, if it lies in the algebra.
struct Decomposition {
  bool in_algebra = false;
  std::array<Rational, 4> coordinates{};
};
Decomposition decompose(const PolyDiffOp& field);

struct BracketEntry {
  int i = 0, j = 0;                  // 1-based generator indices
  std::array<Rational, 4> reversed;  // [Xi, Xj] := Xj Xi - Xi Xj in the X basis
  std::array<Rational, 4> standard;  // Xi Xj - Xj Xi
};

struct GradationReport {
  std::vector<BracketEntry> brackets;
  bool graded = false;                    // [V_i, V_j] subset V_{i+j}
  std::vector<int> lower_central_dims;    // dims of l, [l,l], [l,[l,l]], ...
  int steps = 0;                          // nilpotency step
  bool hormander = false;                 // X1, X2 and iterated brackets span l
  bool jacobi = false;
  bool antisymmetric = false;
  std::vector<std::string> failures;
};

GradationReport verify_gradation();

// Weight of generator i (0-based): 1, 1, 2, 3.
int generator_weight(int i);

}  // namespace engel
