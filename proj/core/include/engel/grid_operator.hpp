#pragma once

#include <functional>

#include "engel/grid.hpp"

namespace engel {

// Dense operator on grid samples. The stored matrix is the action on sample
// vectors, so M(j,k) = h * kernel(u_j, u_k) for an integral operator.
class GridOperator {
 public:
  GridOperator(Grid1D grid, ComplexMatrix action);

  static GridOperator identity(const Grid1D& grid);
  static GridOperator zero(const Grid1D& grid);
  static GridOperator multiplication(const Grid1D& grid, const std::function<Complex(double)>& g);
  static GridOperator multiplication(const Grid1D& grid, const ComplexVector& values);
  // Fourier multiplier g(k): the operator g(-i d/du).
  static GridOperator fourier_multiplier(const Grid1D& grid, const std::function<Complex(double)>& g);
  // Integral operator with kernel K(u, v), weight h.
  static GridOperator from_kernel(const Grid1D& grid, const std::function<Complex(double, double)>& kernel);

  const Grid1D& grid() const { return grid_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  int size() const { return grid_.size(); }
  Complex kernel(int j, int k) const { return matrix_(j, k) / grid_.spacing(); }

  ComplexVector apply(const ComplexVector& samples) const;
  GridOperator adjoint() const;
  // Tr under the grid inner product, i.e. the matrix trace of the action.
  Complex trace() const { return matrix_.trace(); }

  GridOperator& operator+=(const GridOperator& o);
  GridOperator& operator-=(const GridOperator& o);
  GridOperator& operator*=(Complex s);
  friend GridOperator operator+(GridOperator a, const GridOperator& b) { return a += b; }
  friend GridOperator operator-(GridOperator a, const GridOperator& b) { return a -= b; }
  friend GridOperator operator*(Complex s, GridOperator a) { return a *= s; }
  friend GridOperator operator*(const GridOperator& a, const GridOperator& b);

 private:
  void check_compatible(const GridOperator& o) const;

  Grid1D grid_;
  ComplexMatrix matrix_;
};

// (Tr A*A)^{1/2}; with the action matrix this is the Frobenius norm.
double hilbert_schmidt_norm(const GridOperator& a);
double operator_norm(const GridOperator& a);
Eigen::VectorXd singular_values(const GridOperator& a);
// ||A - B||_HS / ||B||_HS (absolute when B = 0).
double relative_hs_difference(const GridOperator& a, const GridOperator& b);
// ||A - A*||_op.
double hermitian_defect(const GridOperator& a);

struct FractionalPowerOptions {
  double relative_floor = 1e-10;
  double hermitian_tolerance = 1e-8;
};

// A^s through the Hermitian eigendecomposition. Throws NumericalFailure if A is
// not Hermitian or has eigenvalues below floor * max|eigenvalue|.
GridOperator fractional_power(const GridOperator& a, double s, const FractionalPowerOptions& opt = {});
Eigen::VectorXd hermitian_eigenvalues(const GridOperator& a);

}  // namespace engel
