#include "engel/grid_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "engel/error.hpp"

namespace engel {

GridOperator::GridOperator(Grid1D grid, ComplexMatrix action) : grid_(std::move(grid)), matrix_(std::move(action)) {
  if (matrix_.rows() != grid_.size() || matrix_.cols() != grid_.size())
    throw std::invalid_argument("GridOperator: matrix size does not match grid");
}

GridOperator GridOperator::identity(const Grid1D& grid) {
  return {grid, ComplexMatrix::Identity(grid.size(), grid.size())};
}

GridOperator GridOperator::zero(const Grid1D& grid) { return {grid, ComplexMatrix::Zero(grid.size(), grid.size())}; }

GridOperator GridOperator::multiplication(const Grid1D& grid, const std::function<Complex(double)>& g) {
  return multiplication(grid, grid.sample(g));
}

GridOperator GridOperator::multiplication(const Grid1D& grid, const ComplexVector& values) {
  if (values.size() != grid.size()) throw std::invalid_argument("multiplication: wrong sample count");
  return {grid, values.asDiagonal().toDenseMatrix()};
}

GridOperator GridOperator::fourier_multiplier(const Grid1D& grid, const std::function<Complex(double)>& g) {
  return {grid, grid.fourier_multiplier(g)};
}

GridOperator GridOperator::from_kernel(const Grid1D& grid, const std::function<Complex(double, double)>& kernel) {
  const int n = grid.size();
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = grid.spacing() * kernel(grid.point(j), grid.point(k));
  return {grid, std::move(m)};
}

ComplexVector GridOperator::apply(const ComplexVector& samples) const {
  if (samples.size() != grid_.size()) throw std::invalid_argument("GridOperator::apply: wrong sample count");
  return matrix_ * samples;
}

GridOperator GridOperator::adjoint() const { return {grid_, matrix_.adjoint()}; }

void GridOperator::check_compatible(const GridOperator& o) const {
  if (!(grid_ == o.grid_)) throw std::invalid_argument("GridOperator: operands live on different grids");
}

GridOperator& GridOperator::operator+=(const GridOperator& o) {
  check_compatible(o);
  matrix_ += o.matrix_;
  return *this;
}

GridOperator& GridOperator::operator-=(const GridOperator& o) {
  check_compatible(o);
  matrix_ -= o.matrix_;
  return *this;
}

GridOperator& GridOperator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

GridOperator operator*(const GridOperator& a, const GridOperator& b) {
  a.check_compatible(b);
  return {a.grid_, a.matrix_ * b.matrix_};
}

double hilbert_schmidt_norm(const GridOperator& a) { return a.matrix().norm(); }

Eigen::VectorXd singular_values(const GridOperator& a) {
  Eigen::BDCSVD<ComplexMatrix> svd(a.matrix());
  return svd.singularValues();
}

double operator_norm(const GridOperator& a) {
  const auto s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

double relative_hs_difference(const GridOperator& a, const GridOperator& b) {
  const double diff = (a.matrix() - b.matrix()).norm();
  const double ref = b.matrix().norm();
  return ref > 0.0 ? diff / ref : diff;
}

double hermitian_defect(const GridOperator& a) {
  return operator_norm(GridOperator(a.grid(), a.matrix() - a.matrix().adjoint()));
}

Eigen::VectorXd hermitian_eigenvalues(const GridOperator& a) {
  const ComplexMatrix sym = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

GridOperator fractional_power(const GridOperator& a, double s, const FractionalPowerOptions& opt) {
  const ComplexMatrix& m = a.matrix();
  const double scale = std::max(1.0, m.norm());
  const double asym = (m - m.adjoint()).norm();
  if (asym > opt.hermitian_tolerance * scale) {
    std::ostringstream os;
    os << "fractional_power: operator is not Hermitian (defect " << asym << ")";
    throw NumericalFailure(os.str());
  }
  if (s == 0.0) return GridOperator::identity(a.grid());
  if (s == 1.0) return a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  const double floor = opt.relative_floor * top;
  if (ev(0) < floor) {
    std::ostringstream os;
    os << "fractional_power: spectrum [" << ev(0) << ", " << ev(ev.size() - 1) << "] has eigenvalues below floor "
       << floor;
    throw NumericalFailure(os.str());
  }
  Eigen::VectorXd powered(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) powered(i) = std::pow(ev(i), s);
  const ComplexMatrix& v = solver.eigenvectors();
  return {a.grid(), v * powered.asDiagonal() * v.adjoint()};
}

}  // namespace engel
