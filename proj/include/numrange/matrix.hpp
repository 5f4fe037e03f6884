#pragma once

#include <Eigen/Dense>
#include <complex>
#include <sstream>

#include "numrange/errors.hpp"

namespace numrange {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using Vec2 = Eigen::Matrix<Real, 2, 1>;

// Relative tolerance below which a matrix counts as Hermitian.
inline constexpr double kHermitianRelTol = 1e-12;

namespace detail {

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived>
constexpr void require_complex() {
  static_assert(Eigen::NumTraits<typename Derived::Scalar>::IsComplex,
                "expected a matrix with std::complex entries");
}

}  // namespace detail

// Largest entry magnitude, the natural scale for entrywise tolerances.
template <typename Derived>
detail::RealOf<Derived> max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  return m.derived().cwiseAbs().maxCoeff();
}

// max_ij |m(i,j) - conj(m(j,i))|, zero exactly when m is Hermitian.
template <typename Derived>
detail::RealOf<Derived> hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m.derived() - m.derived().adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m) {
  using Real = detail::RealOf<Derived>;
  return m.rows() == m.cols() &&
         hermitian_defect(m) <=
             Real(kHermitianRelTol) * (Real(1) + max_abs_entry(m));
}

// Conjugate transpose, returned as a concrete matrix.
template <typename Derived>
ComplexMatrix<detail::RealOf<Derived>> adjoint(
    const Eigen::MatrixBase<Derived>& a) {
  detail::require_complex<Derived>();
  return a.derived().adjoint();
}

// Square-matrix product with an explicit dimension check, so mismatches
// surface as exceptions rather than asserts.
template <typename DerivedA, typename DerivedB>
ComplexMatrix<detail::RealOf<DerivedA>> matmul(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_complex<DerivedA>();
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: incompatible shapes " << a.rows() << "x" << a.cols()
        << " and " << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
  return a.derived() * b.derived();
}

// The two Hermitian matrices with T = real_part + i * imag_part.
template <typename Real>
struct CartesianPair {
  ComplexMatrix<Real> real_part;  // (T + T*) / 2
  ComplexMatrix<Real> imag_part;  // (T - T*) / (2i)
};

// Splits T into its Hermitian real and imaginary parts.  Both outputs are
// exactly Hermitian in floating point: entry (i,j) and the conjugate of
// entry (j,i) are computed from the same two products.
template <typename Derived>
CartesianPair<detail::RealOf<Derived>> cartesian_split(
    const Eigen::MatrixBase<Derived>& t) {
  detail::require_complex<Derived>();
  using Real = detail::RealOf<Derived>;
  if (t.rows() != t.cols()) {
    throw DimensionError("cartesian_split: matrix must be square");
  }
  CartesianPair<Real> pair;
  pair.real_part = (t.derived() + t.derived().adjoint()) * Complex<Real>(Real(0.5), 0);
  pair.imag_part = (t.derived() - t.derived().adjoint()) * Complex<Real>(0, Real(-0.5));
  return pair;
}

// <Tu, u> = u* (T u) for a unit vector u.
template <typename DerivedT, typename DerivedU>
Complex<detail::RealOf<DerivedT>> quadratic_form(
    const Eigen::MatrixBase<DerivedT>& t, const Eigen::MatrixBase<DerivedU>& u) {
  detail::require_complex<DerivedT>();
  using Real = detail::RealOf<DerivedT>;
  if (t.rows() != t.cols() || u.rows() != t.cols() || u.cols() != 1) {
    throw DimensionError("quadratic_form: vector length must match matrix dimension");
  }
  Real nrm = u.derived().norm();
  if (std::abs(nrm - Real(1)) > Real(1e-12)) {
    std::ostringstream msg;
    msg << "quadratic_form: vector norm " << nrm << " is not 1";
    throw NormalizationError(msg.str());
  }
  return u.derived().dot(t.derived() * u.derived());
}

}  // namespace numrange
