#pragma once

#include "numrange/enclosure.hpp"
#include "numrange/matrix.hpp"
#include "numrange/norms.hpp"

namespace numrange {

// Numerical-radius upper bounds for T, all in the spectral norm, plus
// each refinement's ratio to the classical bound ||T||.
template <typename Real>
struct BoundReport {
  Real spectral_norm;
  Real classical;        // ||T||
  Real kittaneh_power;   // (||T|| + ||T^2||^(1/2)) / 2
  Real kittaneh_mean;    // sqrt(||T*T + TT*|| / 2)
  Real octagon;          // farthest vertex of the unit-weight enclosure
  struct Ratios {
    Real kittaneh_power;
    Real kittaneh_mean;
    Real octagon;
  } ratios;
};

template <typename Derived>
detail::RealOf<Derived> bound_classical(const Eigen::MatrixBase<Derived>& t) {
  return spectral_norm(t);
}

template <typename Derived>
detail::RealOf<Derived> bound_kittaneh_power(const Eigen::MatrixBase<Derived>& t) {
  using Real = detail::RealOf<Derived>;
  ComplexMatrix<Real> m = t.derived();
  ComplexMatrix<Real> m2 = m * m;
  return (spectral_norm(m) + std::sqrt(spectral_norm(m2))) / Real(2);
}

template <typename Derived>
detail::RealOf<Derived> bound_kittaneh_mean(const Eigen::MatrixBase<Derived>& t) {
  using Real = detail::RealOf<Derived>;
  ComplexMatrix<Real> m = t.derived();
  ComplexMatrix<Real> mean = m.adjoint() * m + m * m.adjoint();
  return std::sqrt(hermitian_max_abs_eigenvalue(mean) / Real(2));
}

// Farthest-vertex bound from the unit-weight polygon enclosure; for a
// scalar multiple of a Hermitian matrix it is the exact numerical radius
// |c| * ||Q||.
template <typename Derived>
detail::RealOf<Derived> bound_octagon(const Eigen::MatrixBase<Derived>& t) {
  auto pair = cartesian_split(t);
  if (auto deg = degenerate_multiple(pair)) {
    return std::abs(deg->scale) * hermitian_max_abs_eigenvalue(deg->base);
  }
  return radius_bound(pair, NormKind::Spectral).bound;
}

template <typename Derived>
BoundReport<detail::RealOf<Derived>> bound_report(
    const Eigen::MatrixBase<Derived>& t) {
  using Real = detail::RealOf<Derived>;
  BoundReport<Real> r;
  r.spectral_norm = spectral_norm(t);
  if (r.spectral_norm == Real(0)) {
    throw ZeroOperatorError("bound_report: zero operator has no bound ratios");
  }
  r.classical = r.spectral_norm;
  r.kittaneh_power = bound_kittaneh_power(t);
  r.kittaneh_mean = bound_kittaneh_mean(t);
  r.octagon = bound_octagon(t);
  r.ratios = {r.kittaneh_power / r.classical, r.kittaneh_mean / r.classical,
              r.octagon / r.classical};
  return r;
}

}  // namespace numrange
