#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "numrange/hermitian_eig.hpp"
#include "numrange/matrix.hpp"
#include "numrange/norms.hpp"
#include "numrange/polygon.hpp"
#include "numrange/rng.hpp"

namespace numrange {

// One boundary probe of the numerical range: at direction angle, the
// support value max Re(e^{-i*angle} <Tu,u>) and the extreme point <Tu,u>
// itself, written as (x, y) = (Re, Im).
template <typename Real>
struct BoundaryPoint {
  Real angle;
  Real support;
  Vec2<Real> point;
};

// Brute-force picture of the numerical range, independent of the polygon
// machinery.  oracle_radius is the largest |<Tu,u>| seen over all probes.
template <typename Real>
struct FovSample {
  std::vector<BoundaryPoint<Real>> boundary;
  std::vector<Vec2<Real>> interior;
  Real oracle_radius = 0;
};

template <typename Real>
struct SupportEval {
  Real support;
  ComplexVector<Real> maximizer;  // unit eigenvector attaining it
};

// Support function of the numerical range in direction
// (cos angle, sin angle): the top eigenvalue of
// cos(angle) * real_part + sin(angle) * imag_part, with its eigenvector.
template <typename Real>
SupportEval<Real> support_function(const CartesianPair<Real>& pair, Real angle) {
  ComplexMatrix<Real> h =
      std::cos(angle) * pair.real_part + std::sin(angle) * pair.imag_part;
  auto eig = hermitian_eigen(h);
  Eigen::Index last = eig.values.size() - 1;
  return {eig.values(last), eig.vectors.col(last)};
}

namespace detail {

template <typename Real>
BoundaryPoint<Real> boundary_probe(const CartesianPair<Real>& pair, Real angle) {
  SupportEval<Real> ev = support_function(pair, angle);
  const ComplexVector<Real>& u = ev.maximizer;
  Real x = u.dot(pair.real_part * u).real();
  Real y = u.dot(pair.imag_part * u).real();
  return {angle, ev.support, Vec2<Real>(x, y)};
}

}  // namespace detail

// Sweeps n_angles equally spaced support directions, plus the four slab
// normals and their opposites so polygon tangency points are always
// probed.  A short follow-up pass re-aims at the farthest point seen so
// far until its modulus stops improving; that pins oracle_radius to the
// true numerical radius far more tightly than the grid alone.
template <typename Real>
FovSample<Real> boundary_sweep(const CartesianPair<Real>& pair, int n_angles = 720) {
  if (n_angles < 3) {
    throw Error("boundary_sweep: need at least three angles");
  }
  const Real pi = Real(3.141592653589793238462643383279502884L);
  FovSample<Real> sample;
  sample.boundary.reserve(static_cast<std::size_t>(n_angles) + 40);
  for (int k = 0; k < n_angles; ++k) {
    sample.boundary.push_back(
        detail::boundary_probe(pair, Real(2) * pi * Real(k) / Real(n_angles)));
  }
  for (int k = 0; k < 8; ++k) {
    sample.boundary.push_back(detail::boundary_probe(pair, pi * Real(k) / Real(4)));
  }

  auto radius_of = [](const FovSample<Real>& s) {
    Real r = 0;
    for (const auto& b : s.boundary) r = std::max(r, b.point.norm());
    return r;
  };
  Real radius = radius_of(sample);
  Vec2<Real> best(0, 0);
  for (const auto& b : sample.boundary) {
    if (b.point.norm() == radius) best = b.point;
  }
  for (int iter = 0; iter < 32 && radius > Real(0); ++iter) {
    Real aim = std::atan2(best.y(), best.x());
    BoundaryPoint<Real> probe = detail::boundary_probe(pair, aim);
    sample.boundary.push_back(probe);
    Real r = probe.point.norm();
    if (r <= radius * (Real(1) + Real(1e-15))) break;
    radius = r;
    best = probe.point;
  }
  sample.oracle_radius = radius_of(sample);
  return sample;
}

// n points <Tu,u> for unit vectors u drawn uniformly on the sphere
// (normalized complex Gaussians), deterministic in the seed.
template <typename Derived>
std::vector<Vec2<detail::RealOf<Derived>>> interior_sample(
    const Eigen::MatrixBase<Derived>& t, int n, std::uint64_t seed) {
  using Real = detail::RealOf<Derived>;
  ComplexMatrix<Real> m = t.derived();
  if (m.rows() != m.cols()) {
    throw DimensionError("interior_sample: matrix must be square");
  }
  Rng rng(seed);
  std::vector<Vec2<Real>> points;
  points.reserve(static_cast<std::size_t>(n));
  ComplexVector<Real> u(m.rows());
  while (static_cast<int>(points.size()) < n) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      auto z = rng.normal_complex();
      u(i) = Complex<Real>(Real(z.real()), Real(z.imag()));
    }
    Real nrm = u.norm();
    if (nrm == Real(0)) continue;
    u /= nrm;
    Complex<Real> w = u.dot(m * u);
    points.emplace_back(w.real(), w.imag());
  }
  return points;
}

// Boundary sweep plus interior cloud in one structure; oracle_radius
// covers both point sets.
template <typename Derived>
FovSample<detail::RealOf<Derived>> sample_fov(const Eigen::MatrixBase<Derived>& t,
                                              int n_angles, int n_interior,
                                              std::uint64_t seed) {
  using Real = detail::RealOf<Derived>;
  auto pair = cartesian_split(t);
  FovSample<Real> sample = boundary_sweep(pair, n_angles);
  sample.interior = interior_sample(t, n_interior, seed);
  for (const auto& p : sample.interior) {
    sample.oracle_radius = std::max(sample.oracle_radius, p.norm());
  }
  return sample;
}

template <typename Real>
struct DirectionTangency {
  Vec2<Real> direction;  // unit outward normal of the slab side
  Real offset;           // side position: the slab bound along direction
  Real support;          // numerical-range support in that direction
  Real gap;              // |support - offset|
  bool tangent;
};

template <typename Real>
struct TangencyReport {
  std::array<DirectionTangency<Real>, 4> sides;
  bool all_tangent;
};

// Checks that the numerical range touches each of the four spectral-norm
// slab boundaries on at least one of its two sides.  For each slab
// direction the larger of the two opposite supports is compared against
// the slab offset; equality within tol certifies tangency.
template <typename Real>
TangencyReport<Real> tangency_check(const CartesianPair<Real>& pair, Real tol) {
  const Real pi = Real(3.141592653589793238462643383279502884L);
  const Real rt2 = std::sqrt(Real(2));
  Real nh = norm(pair.real_part, NormKind::Spectral);
  Real ns = norm(pair.imag_part, NormKind::Spectral);
  Real np = norm(pair.real_part + pair.imag_part, NormKind::Spectral);
  Real nm = norm(pair.real_part - pair.imag_part, NormKind::Spectral);

  struct Probe {
    Vec2<Real> dir;
    Real angle;
    Real offset;
  };
  const Probe probes[4] = {
      {Vec2<Real>(1, 0), Real(0), nh},
      {Vec2<Real>(0, 1), pi / 2, ns},
      {Vec2<Real>(Real(1) / rt2, Real(1) / rt2), pi / 4, np / rt2},
      {Vec2<Real>(Real(1) / rt2, Real(-1) / rt2), -pi / 4, nm / rt2},
  };

  TangencyReport<Real> report;
  report.all_tangent = true;
  for (int i = 0; i < 4; ++i) {
    Real fwd = support_function(pair, probes[i].angle).support;
    Real bwd = support_function(pair, probes[i].angle + pi).support;
    Real reach = std::max(fwd, bwd);
    DirectionTangency<Real>& side = report.sides[i];
    side.direction = probes[i].dir;
    side.offset = probes[i].offset;
    side.support = reach;
    side.gap = std::abs(reach - probes[i].offset);
    side.tangent = side.gap <= tol;
    report.all_tangent = report.all_tangent && side.tangent;
  }
  return report;
}

}  // namespace numrange
