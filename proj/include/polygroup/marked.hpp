#pragma once

// Marked polytopes and the two constructions of the invariant of a nice
// two-generator one-relator presentation: the lattice walk and the
// Fox-derivative route with marked deconvolution.

#include <map>
#include <vector>

#include "polygroup/groth.hpp"
#include "polygroup/words.hpp"

namespace polygroup {

/// Polytope (ambient dim <= 2) with a distinguished subset of its
/// vertices, stored as sorted vertex indices into the canonical list.
struct MarkedPolytope {
  IntegralPolytope polytope;
  std::vector<std::size_t> marked;

  MarkedPolytope(IntegralPolytope p, std::vector<std::size_t> marks);

  bool is_marked(std::size_t vertex_index) const;

  bool operator==(const MarkedPolytope& o) const {
    return polytope == o.polytope && marked == o.marked;
  }
  bool operator!=(const MarkedPolytope& o) const { return !(*this == o); }
};

/// Hull of the nonvanishing fiber points; a vertex is marked iff its
/// fiber is a single free word with coefficient +1 or -1.
MarkedPolytope marked_from_fibers(
    const std::map<LatticePoint, FreeWordSum>& fibers);

/// Minkowski sum of the polytopes; every vertex of the sum decomposes
/// uniquely as a vertex of each summand, and is marked iff both parts
/// are marked.
MarkedPolytope marked_sum(const MarkedPolytope& m, const MarkedPolytope& n);
inline MarkedPolytope operator+(const MarkedPolytope& m,
                                const MarkedPolytope& n) {
  return marked_sum(m, n);
}

/// Inverse of `marked_sum` against a segment with both endpoints marked:
/// returns the unique M with marked_sum(M, seg) = s.  The marking of
/// each vertex of M is read off the marks of its images among s's
/// vertices; disagreeing images mean s is not a valid marked sum and
/// raise a ValidationError naming the offending vertex.
MarkedPolytope deconvolve_segment(const MarkedPolytope& s,
                                  const MarkedPolytope& seg);

/// All lattice points visited while reading the relator from the left,
/// starting at the origin (x steps (1,0), y steps (0,1), inverses
/// negated; every step endpoint is included).
std::vector<LatticePoint> walk_trace(const Presentation& p);

/// Hull of the walk trace.
IntegralPolytope walk_hull(const Presentation& p);

/// The invariant polytope of a nice presentation: the walk hull eroded
/// by the unit square.  The erosion always exists for nice input; a
/// failure is surfaced as a DiscrepancyError.
IntegralPolytope walk_polytope(const Presentation& p);

/// The marked invariant via the Fox route: deconvolve the marked Newton
/// polytope of dr/dx by that of y-1 (route 'x'; route 'y' symmetric).
/// The underlying polytope is checked against walk_polytope; a mismatch
/// raises a DiscrepancyError carrying both results.
MarkedPolytope marked_invariant(const Presentation& p, char route = 'x');

/// The b1 = 1 invariant: Newton polytope of the derivative minus the
/// Newton polytope of (other generator - 1), computed along a route
/// whose paired generator has nonzero image in H.
GrothElement interval_invariant(const Presentation& p);

}  // namespace polygroup
