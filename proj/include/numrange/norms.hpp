#pragma once

#include <Eigen/Dense>

#include "numrange/hermitian_eig.hpp"
#include "numrange/matrix.hpp"

namespace numrange {

enum class NormKind { Spectral, InducedOne, InducedInf, Frobenius };

inline const char* norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::Spectral: return "spectral";
    case NormKind::InducedOne: return "one";
    case NormKind::InducedInf: return "inf";
    case NormKind::Frobenius: return "frobenius";
  }
  return "?";
}

// Largest singular value.  Hermitian inputs take the direct eigenvalue
// path; otherwise the norm comes from the top eigenvalue of T*T, clamped
// at zero before the square root to absorb roundoff.
template <typename Derived>
detail::RealOf<Derived> spectral_norm(const Eigen::MatrixBase<Derived>& t) {
  using Real = detail::RealOf<Derived>;
  ComplexMatrix<Real> m = t.derived();
  if (is_hermitian(m)) {
    return hermitian_max_abs_eigenvalue(m);
  }
  ComplexMatrix<Real> gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> solver(
      (gram + gram.adjoint()) * Complex<Real>(Real(0.5), 0), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("spectral_norm: eigensolver did not converge");
  }
  Real top = solver.eigenvalues()(solver.eigenvalues().size() - 1);
  return std::sqrt(std::max(top, Real(0)));
}

template <typename Derived>
detail::RealOf<Derived> norm(const Eigen::MatrixBase<Derived>& t, NormKind kind) {
  switch (kind) {
    case NormKind::Spectral:
      return spectral_norm(t);
    case NormKind::InducedOne:
      return t.derived().cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::InducedInf:
      return t.derived().cwiseAbs().rowwise().sum().maxCoeff();
    case NormKind::Frobenius:
      return t.derived().norm();
  }
  throw Error("norm: unknown norm kind");
}

}  // namespace numrange
