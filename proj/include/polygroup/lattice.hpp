#pragma once

/**
 * Exact geometry of integral polytopes: convex hulls, Minkowski sums,
 * erosion (Minkowski difference), support functions, minimal faces and
 * normal fans.
 *
 * All arithmetic is arbitrary-precision integer/rational; no floating
 * point enters any predicate.  A polytope stores its ambient dimension
 * and a canonical vertex list: dim 1 sorted ascending, dim 2 counter-
 * clockwise starting at the lexicographically smallest vertex, dim >= 3
 * lexicographically sorted.  Degenerate polytopes (points and segments
 * inside a larger ambient lattice) are first-class values; "dim" always
 * means ambient dimension.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

#include "polygroup/errors.hpp"

namespace polygroup {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct LatticePoint {
  std::vector<Int> c;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> coords) : c(std::move(coords)) {}
  static LatticePoint origin(std::size_t dim) {
    return LatticePoint(std::vector<Int>(dim, 0));
  }

  std::size_t dim() const { return c.size(); }

  bool operator==(const LatticePoint& o) const { return c == o.c; }
  bool operator!=(const LatticePoint& o) const { return c != o.c; }
  bool operator<(const LatticePoint& o) const { return c < o.c; }
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
LatticePoint operator*(const Int& k, const LatticePoint& a);

/// Integer covector on the ambient lattice.  The raw entries are kept as
/// given so evaluation scales with the caller's input; `primitive()`
/// divides by the gcd and preserves the ray.
struct Direction {
  std::vector<Int> c;

  explicit Direction(std::vector<Int> covector);

  std::size_t dim() const { return c.size(); }
  Int eval(const LatticePoint& p) const;

  Direction primitive() const;
  Direction negated() const;
  bool is_primitive() const;

  bool operator==(const Direction& o) const { return c == o.c; }
  bool operator!=(const Direction& o) const { return c != o.c; }
};

class IntegralPolytope {
 public:
  /// Convex hull of a finite non-empty point set; the result stores the
  /// canonical vertex list described in the header comment.
  static IntegralPolytope hull(const std::vector<LatticePoint>& points);
  static IntegralPolytope point(const LatticePoint& v);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }
  bool is_point() const { return verts_.size() == 1; }
  bool is_segment() const { return verts_.size() == 2; }

  bool operator==(const IntegralPolytope& o) const {
    return dim_ == o.dim_ && verts_ == o.verts_;
  }
  bool operator!=(const IntegralPolytope& o) const { return !(*this == o); }

 private:
  IntegralPolytope(std::size_t dim, std::vector<LatticePoint> verts)
      : dim_(dim), verts_(std::move(verts)) {}

  std::size_t dim_ = 0;
  std::vector<LatticePoint> verts_;
};

IntegralPolytope minkowski_sum(const IntegralPolytope& p,
                               const IntegralPolytope& q);
inline IntegralPolytope operator+(const IntegralPolytope& p,
                                  const IntegralPolytope& q) {
  return minkowski_sum(p, q);
}

IntegralPolytope translate(const IntegralPolytope& p, const LatticePoint& v);
IntegralPolytope mirror(const IntegralPolytope& p);
IntegralPolytope dilate(const IntegralPolytope& p, const Int& k);

Int support(const IntegralPolytope& p, const Direction& phi);
Int thickness(const IntegralPolytope& p, const Direction& phi);

/// Vertex set of the phi-minimal face, sorted lexicographically so that
/// faces compare as canonical sets.
std::vector<LatticePoint> min_face(const IntegralPolytope& p,
                                   const Direction& phi);

/// Shift so the lexicographically smallest vertex sits at the origin.
IntegralPolytope canonical_translate(const IntegralPolytope& p);
bool translation_eq(const IntegralPolytope& p, const IntegralPolytope& q);

/// Minkowski difference, dim <= 2 only: the unique R with R + Q = P when
/// it exists.  Computed as the integral hull of {x : x + Q subset of P},
/// with membership decided by exact halfplane tests over P's edge
/// normals, then verified by re-summation.
std::optional<IntegralPolytope> erode(const IntegralPolytope& p,
                                      const IntegralPolytope& q);

/// Exact membership of a rational point, decided by rational linear
/// feasibility (any dimension).
bool contains_point(const IntegralPolytope& p, const std::vector<Rat>& x);
bool contains_point(const IntegralPolytope& p, const LatticePoint& x);

/// Open cone of directions for which one vertex is the unique maximizer,
/// as a CCW pair of primitive boundary rays (the adjacent edge normals).
struct NormalArc {
  std::size_t vertex;
  Direction begin;
  Direction end;
};

/// Vertex normal fan of a dim-2 polytope.  The open cones of all
/// vertices partition the circle minus the edge-normal rays; a point
/// polytope reports the full circle.
struct NormalFan {
  bool full_circle = false;
  std::vector<NormalArc> arcs;
};

NormalFan normal_arcs(const IntegralPolytope& p);

/// Dense integer matrix (row-major), used for pushforwards along linear
/// maps and for abelianizations.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  LatticePoint apply(const LatticePoint& p) const;
  IntMatrix compose(const IntMatrix& inner) const;  // this * inner

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

}  // namespace polygroup
