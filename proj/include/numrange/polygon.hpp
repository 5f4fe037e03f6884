#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <variant>
#include <vector>

#include "numrange/errors.hpp"
#include "numrange/matrix.hpp"

namespace numrange {

// The strip |a*x + b*y| <= c in the plane.
template <typename Real>
struct Slab {
  Real a, b, c;
};

enum class PolygonShape { Quadrilateral, Hexagon, Octagon };

inline const char* shape_name(PolygonShape shape) {
  switch (shape) {
    case PolygonShape::Quadrilateral: return "quadrilateral";
    case PolygonShape::Hexagon: return "hexagon";
    case PolygonShape::Octagon: return "octagon";
  }
  return "?";
}

// Counterclockwise vertex loop, symmetric under negation, no repeats.
template <typename Real>
struct ConvexPolygon {
  std::vector<Vec2<Real>> vertices;
  PolygonShape shape;
};

// Degenerate region: the segment from -endpoint to +endpoint.
template <typename Real>
struct Segment {
  Vec2<Real> endpoint;
};

template <typename Real>
using EnclosureRegion = std::variant<ConvexPolygon<Real>, Segment<Real>>;

namespace detail {

// Clips a convex polygon against the half-plane a*x + b*y <= c.
// Vertices exactly on the line are kept as-is, so repeated clipping does
// not chew away boundary points.
template <typename Real>
std::vector<Vec2<Real>> clip_halfplane(const std::vector<Vec2<Real>>& poly,
                                       Real a, Real b, Real c) {
  std::vector<Vec2<Real>> out;
  out.reserve(poly.size() + 2);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Real>& cur = poly[i];
    const Vec2<Real>& nxt = poly[(i + 1) % n];
    Real d1 = a * cur.x() + b * cur.y() - c;
    Real d2 = a * nxt.x() + b * nxt.y() - c;
    if (d1 <= Real(0)) out.push_back(cur);
    if ((d1 < Real(0) && d2 > Real(0)) || (d1 > Real(0) && d2 < Real(0))) {
      Real s = d1 / (d1 - d2);
      out.push_back(cur + s * (nxt - cur));
    }
  }
  return out;
}

template <typename Real>
Real signed_area(const std::vector<Vec2<Real>>& poly) {
  Real twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2<Real>& p = poly[i];
    const Vec2<Real>& q = poly[(i + 1) % poly.size()];
    twice += p.x() * q.y() - p.y() * q.x();
  }
  return twice / Real(2);
}

// Merges cyclically adjacent vertices closer than eps, keeping the first
// of each run.  Runs are symmetric under negation, so a sign-symmetric
// input stays sign-symmetric.
template <typename Real>
std::vector<Vec2<Real>> dedup_cyclic(const std::vector<Vec2<Real>>& poly, Real eps) {
  std::vector<Vec2<Real>> out;
  for (const Vec2<Real>& v : poly) {
    if (out.empty() || (v - out.back()).norm() > eps) out.push_back(v);
  }
  while (out.size() > 1 && (out.back() - out.front()).norm() <= eps) {
    out.pop_back();
  }
  return out;
}

}  // namespace detail

// Intersects the given slabs.  Two slabs with independent directions seed
// a parallelogram; every remaining half-plane is clipped off in turn.
// Near-duplicate corners within dedup_eps are merged before the vertex
// count is classified.
template <typename Real>
ConvexPolygon<Real> clip_intersection(std::span<const Slab<Real>> slabs,
                                      Real dedup_eps) {
  if (slabs.size() < 2) {
    throw EmptyIntersectionError("clip_intersection: need at least two slabs");
  }
  Real scale = 0;
  for (const auto& s : slabs) {
    scale = std::max({scale, std::abs(s.a), std::abs(s.b)});
  }
  std::size_t second = 0;
  for (std::size_t j = 1; j < slabs.size(); ++j) {
    Real det = slabs[0].a * slabs[j].b - slabs[0].b * slabs[j].a;
    if (std::abs(det) > Real(1e-12) * scale * scale) {
      second = j;
      break;
    }
  }
  if (second == 0) {
    throw EmptyIntersectionError(
        "clip_intersection: all slabs share one direction, region is unbounded");
  }

  const Slab<Real>& s1 = slabs[0];
  const Slab<Real>& s2 = slabs[second];
  Real det = s1.a * s2.b - s1.b * s2.a;
  auto corner = [&](Real sign1, Real sign2) {
    return Vec2<Real>((sign1 * s1.c * s2.b - sign2 * s2.c * s1.b) / det,
                      (s1.a * sign2 * s2.c - s2.a * sign1 * s1.c) / det);
  };
  std::vector<Vec2<Real>> poly = {corner(1, 1), corner(-1, 1), corner(-1, -1),
                                  corner(1, -1)};
  if (detail::signed_area(poly) < Real(0)) {
    std::reverse(poly.begin(), poly.end());
  }

  for (std::size_t j = 0; j < slabs.size(); ++j) {
    if (j == 0 || j == second) continue;
    const Slab<Real>& s = slabs[j];
    poly = detail::clip_halfplane(poly, s.a, s.b, s.c);
    if (poly.empty()) {
      throw EmptyIntersectionError("clip_intersection: intersection is empty");
    }
    poly = detail::clip_halfplane(poly, -s.a, -s.b, s.c);
    if (poly.empty()) {
      throw EmptyIntersectionError("clip_intersection: intersection is empty");
    }
  }

  poly = detail::dedup_cyclic(poly, dedup_eps);
  if (poly.size() < 4) {
    throw EmptyIntersectionError(
        "clip_intersection: region collapsed below four vertices");
  }
  ConvexPolygon<Real> result;
  result.vertices = std::move(poly);
  switch (result.vertices.size()) {
    case 4: result.shape = PolygonShape::Quadrilateral; break;
    case 6: result.shape = PolygonShape::Hexagon; break;
    case 8: result.shape = PolygonShape::Octagon; break;
    default:
      throw Error("clip_intersection: unexpected vertex count " +
                  std::to_string(result.vertices.size()));
  }
  return result;
}

template <typename Real>
ConvexPolygon<Real> clip_intersection(const std::vector<Slab<Real>>& slabs,
                                      Real dedup_eps) {
  return clip_intersection(std::span<const Slab<Real>>(slabs.data(), slabs.size()),
                           dedup_eps);
}

// How far the point sits outside the region: 0 inside, otherwise the
// largest distance by which an edge constraint is violated.
template <typename Real>
Real containment_defect(const ConvexPolygon<Real>& poly, const Vec2<Real>& p) {
  Real worst = 0;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<Real>& v1 = poly.vertices[i];
    const Vec2<Real>& v2 = poly.vertices[(i + 1) % n];
    Vec2<Real> e = v2 - v1;
    Real len = e.norm();
    if (len == Real(0)) continue;
    // Positive cross means p lies left of the directed edge (inside for a
    // counterclockwise loop).
    Real cross = e.x() * (p.y() - v1.y()) - e.y() * (p.x() - v1.x());
    worst = std::max(worst, -cross / len);
  }
  return worst;
}

template <typename Real>
Real containment_defect(const Segment<Real>& seg, const Vec2<Real>& p) {
  Vec2<Real> e = seg.endpoint;
  Real len2 = e.squaredNorm();
  if (len2 == Real(0)) return p.norm();
  // Project onto the segment from -e to +e and clamp.
  Real t = std::clamp(p.dot(e) / len2, Real(-1), Real(1));
  return (p - t * e).norm();
}

template <typename Real>
Real containment_defect(const EnclosureRegion<Real>& region, const Vec2<Real>& p) {
  return std::visit([&](const auto& r) { return containment_defect(r, p); },
                    region);
}

template <typename Real>
bool contains(const EnclosureRegion<Real>& region, const Vec2<Real>& p, Real tol) {
  return containment_defect(region, p) <= tol;
}

template <typename Real>
Real max_vertex_radius(const ConvexPolygon<Real>& poly) {
  Real r = 0;
  for (const auto& v : poly.vertices) r = std::max(r, v.norm());
  return r;
}

template <typename Real>
Real max_radius(const EnclosureRegion<Real>& region) {
  if (const auto* seg = std::get_if<Segment<Real>>(&region)) {
    return seg->endpoint.norm();
  }
  return max_vertex_radius(std::get<ConvexPolygon<Real>>(region));
}

// Convex hull by Andrew's monotone chain, counterclockwise, no collinear
// interior points.  Used for plotting sweeps and for hull-membership tests.
template <typename Real>
std::vector<Vec2<Real>> convex_hull(std::vector<Vec2<Real>> pts) {
  auto less = [](const Vec2<Real>& p, const Vec2<Real>& q) {
    return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2<Real>& p, const Vec2<Real>& q) {
                          return p.x() == q.x() && p.y() == q.y();
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vec2<Real>& o, const Vec2<Real>& p, const Vec2<Real>& q) {
    return (p.x() - o.x()) * (q.y() - o.y()) - (p.y() - o.y()) * (q.x() - o.x());
  };
  std::vector<Vec2<Real>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= Real(0)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= Real(0)) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace numrange
