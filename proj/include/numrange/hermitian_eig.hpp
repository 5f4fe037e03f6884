#pragma once

#include <Eigen/Dense>
#include <sstream>

#include "numrange/errors.hpp"
#include "numrange/matrix.hpp"

namespace numrange {

// Full spectral decomposition of a Hermitian matrix.  values(k) is the
// k-th eigenvalue in ascending order and vectors.col(k) a matching unit
// eigenvector.
template <typename Real>
struct HermitianEigenResult {
  RealVector<Real> values;
  ComplexMatrix<Real> vectors;
};

namespace detail {

// Hermiticity gate shared by the eigen routines.
template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& h, const char* who) {
  using Real = RealOf<Derived>;
  if (h.rows() != h.cols()) {
    throw DimensionError(std::string(who) + ": matrix must be square");
  }
  Real defect = hermitian_defect(h);
  Real tol = Real(kHermitianRelTol) * (Real(1) + max_abs_entry(h));
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << who << ": matrix is not Hermitian (defect " << defect
        << " exceeds " << tol << ")";
    throw NotHermitianError(msg.str());
  }
}

}  // namespace detail

template <typename Derived>
HermitianEigenResult<detail::RealOf<Derived>> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& h) {
  using Real = detail::RealOf<Derived>;
  detail::require_hermitian(h, "hermitian_eigen");
  // Symmetrize first so the solver sees an exactly Hermitian input even
  // when h only passes the tolerance gate.
  ComplexMatrix<Real> sym =
      (h.derived() + h.derived().adjoint()) * Complex<Real>(Real(0.5), 0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("hermitian_eigen: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// max |eigenvalue|, i.e. the spectral norm of a Hermitian matrix, via an
// eigenvalues-only solve.
template <typename Derived>
detail::RealOf<Derived> hermitian_max_abs_eigenvalue(
    const Eigen::MatrixBase<Derived>& h) {
  using Real = detail::RealOf<Derived>;
  detail::require_hermitian(h, "hermitian_max_abs_eigenvalue");
  ComplexMatrix<Real> sym =
      (h.derived() + h.derived().adjoint()) * Complex<Real>(Real(0.5), 0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("hermitian_max_abs_eigenvalue: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace numrange
