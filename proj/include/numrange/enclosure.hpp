#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "numrange/matrix.hpp"
#include "numrange/norms.hpp"
#include "numrange/polygon.hpp"

namespace numrange {

// T written as scale * base with base Hermitian.
template <typename Real>
struct ScaledHermitian {
  Complex<Real> scale;
  ComplexMatrix<Real> base;
};

// Detects T = c * Q with Q Hermitian, the case where the numerical range
// collapses to a segment through the origin.  Equivalent to the real and
// imaginary parts being real multiples of one another, so we least-squares
// fit the smaller part onto the larger and accept when the residual is
// negligible against the overall scale.  Returns nothing otherwise.
template <typename Real>
std::optional<ScaledHermitian<Real>> degenerate_multiple(
    const CartesianPair<Real>& pair, Real tol = Real(1e-10)) {
  const ComplexMatrix<Real>& h = pair.real_part;
  const ComplexMatrix<Real>& s = pair.imag_part;
  Real fh = h.norm();
  Real fs = s.norm();
  Real scale = Real(1) + fh + fs;
  if (fh >= fs) {
    if (fh == Real(0)) {
      return ScaledHermitian<Real>{Complex<Real>(0, 0), h};  // T = 0
    }
    Real t = (h.array().conjugate() * s.array()).sum().real() / (fh * fh);
    if ((s - t * h).norm() <= tol * scale) {
      return ScaledHermitian<Real>{Complex<Real>(1, t), h};
    }
  } else {
    Real t = (s.array().conjugate() * h.array()).sum().real() / (fs * fs);
    if ((h - t * s).norm() <= tol * scale) {
      return ScaledHermitian<Real>{Complex<Real>(t, 1), s};
    }
  }
  return std::nullopt;
}

// Axis-aligned bounding slabs: |x| <= ||real_part||, |y| <= ||imag_part||.
template <typename Real>
std::array<Slab<Real>, 2> rectangle_slabs(const CartesianPair<Real>& pair,
                                          NormKind kind) {
  return {Slab<Real>{1, 0, norm(pair.real_part, kind)},
          Slab<Real>{0, 1, norm(pair.imag_part, kind)}};
}

template <typename Real>
struct ParallelogramWeights {
  Real alpha = 1, beta = 1, gamma = 1, delta = 1;
};

// Merge radius for near-coincident polygon corners, relative to the size
// of the operator in the chosen norm.
template <typename Real>
Real dedup_epsilon(const CartesianPair<Real>& pair, NormKind kind) {
  ComplexMatrix<Real> t = pair.real_part + Complex<Real>(0, 1) * pair.imag_part;
  return Real(1e-9) * (Real(1) + norm(t, kind));
}

// Diagonal slabs |alpha*x + beta*y| <= ||alpha*H + beta*S|| and
// |gamma*x - delta*y| <= ||gamma*H - delta*S||.  When either combination
// has negligible norm the slabs no longer bound a parallelogram, which is
// exactly the degenerate T = c*Q case, reported as an error here.
template <typename Real>
std::array<Slab<Real>, 2> parallelogram_slabs(
    const CartesianPair<Real>& pair, NormKind kind,
    const ParallelogramWeights<Real>& w = {}) {
  if (!(w.alpha > Real(0)) || !(w.beta > Real(0)) || !(w.gamma > Real(0)) ||
      !(w.delta > Real(0))) {
    throw Error("parallelogram_slabs: weights must be positive");
  }
  Real plus = norm(w.alpha * pair.real_part + w.beta * pair.imag_part, kind);
  Real minus = norm(w.gamma * pair.real_part - w.delta * pair.imag_part, kind);
  Real eps = dedup_epsilon(pair, kind);
  if (plus <= eps || minus <= eps) {
    throw DegenerateOperatorError(
        "parallelogram_slabs: operator is a scalar multiple of a Hermitian "
        "matrix, slabs collapse");
  }
  return {Slab<Real>{w.alpha, w.beta, plus}, Slab<Real>{w.gamma, -w.delta, minus}};
}

// Vertical reach is the largest |y| attained on the rectangle's right
// side, horizontal reach the largest |x| on its top side; bound is the
// distance from the origin to the farthest polygon vertex.
template <typename Real>
struct RadiusBound {
  Real vertical_reach;
  Real horizontal_reach;
  Real bound;
};

template <typename Real>
RadiusBound<Real> radius_bound(const CartesianPair<Real>& pair, NormKind kind) {
  Real nh = norm(pair.real_part, kind);
  Real ns = norm(pair.imag_part, kind);
  Real np = norm(pair.real_part + pair.imag_part, kind);
  Real nm = norm(pair.real_part - pair.imag_part, kind);
  RadiusBound<Real> r;
  r.vertical_reach = std::max(std::abs(np - nh), std::abs(nm - nh));
  r.horizontal_reach = std::max(std::abs(np - ns), std::abs(nm - ns));
  r.bound = std::sqrt(std::max(r.vertical_reach * r.vertical_reach + nh * nh,
                               r.horizontal_reach * r.horizontal_reach + ns * ns));
  return r;
}

// Closed-form enclosure with unit weights.  The four norms pin all eight
// corner candidates directly: each diagonal slab boundary meets the
// rectangle boundary at points whose coordinates are differences of the
// norms.  Listed counterclockwise starting on the right edge; merging
// coincident neighbours yields the quadrilateral, hexagon or octagon.
// A degenerate operator instead yields the segment with endpoint
// c * ||Q||_sigma (spectral regardless of the ambient norm choice, since
// the segment is the exact numerical range).
template <typename Real>
EnclosureRegion<Real> enclosure_region(const CartesianPair<Real>& pair,
                                       NormKind kind = NormKind::Spectral) {
  if (auto deg = degenerate_multiple(pair)) {
    Complex<Real> endpoint = deg->scale * hermitian_max_abs_eigenvalue(deg->base);
    return Segment<Real>{Vec2<Real>(endpoint.real(), endpoint.imag())};
  }
  Real nh = norm(pair.real_part, kind);
  Real ns = norm(pair.imag_part, kind);
  Real np = norm(pair.real_part + pair.imag_part, kind);
  Real nm = norm(pair.real_part - pair.imag_part, kind);
  std::vector<Vec2<Real>> v = {
      {nh, nh - nm},       // right edge, below the -45 degree cut
      {nh, np - nh},       // right edge, below the +45 degree cut
      {np - ns, ns},       // top edge, right end
      {ns - nm, ns},       // top edge, left end
  };
  std::vector<Vec2<Real>> loop;
  loop.reserve(8);
  for (const auto& p : v) loop.push_back(p);
  for (const auto& p : v) loop.push_back(-p);
  loop = detail::dedup_cyclic(loop, dedup_epsilon(pair, kind));
  ConvexPolygon<Real> poly;
  poly.vertices = std::move(loop);
  switch (poly.vertices.size()) {
    case 4: poly.shape = PolygonShape::Quadrilateral; break;
    case 6: poly.shape = PolygonShape::Hexagon; break;
    case 8: poly.shape = PolygonShape::Octagon; break;
    default:
      throw Error("enclosure_region: unexpected vertex count " +
                  std::to_string(poly.vertices.size()));
  }
  return poly;
}

// Same region by the general route: clip the rectangle against the
// diagonal slabs.  Cross-checks the closed form and supports non-unit
// weights.
template <typename Real>
ConvexPolygon<Real> clipped_region(const CartesianPair<Real>& pair,
                                   NormKind kind = NormKind::Spectral,
                                   const ParallelogramWeights<Real>& w = {}) {
  auto rect = rectangle_slabs(pair, kind);
  auto para = parallelogram_slabs(pair, kind, w);
  std::array<Slab<Real>, 4> slabs = {rect[0], rect[1], para[0], para[1]};
  return clip_intersection(std::span<const Slab<Real>>(slabs),
                           dedup_epsilon(pair, kind));
}

}  // namespace numrange
