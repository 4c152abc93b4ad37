#pragma once

// BNS-invariant queries, thickness with optional Thurston-norm labeling,
// and splitting complexity, all driven by the marked invariant polytope.

#include <vector>

#include "polygroup/marked.hpp"

namespace polygroup {

struct BnsArc {
  Direction begin;
  Direction end;  // open CCW sector between the primitive boundary rays
};

/// Exact description of the set of directions pairing maximally with a
/// marked vertex: the whole circle (marked point polytope), nothing, or
/// a list of disjoint open arcs bounded by edge normals.
struct BnsReport {
  enum class Kind { full_circle, empty, arcs };
  Kind kind = Kind::empty;
  std::vector<BnsArc> arcs;
};

/// Whether the ray of phi lies in the open sector.  Sectors span at most
/// a half circle, so the test is a pair of exact cross-product signs.
bool arc_contains(const BnsArc& arc, const Direction& phi);

/// True iff the phi-maximal vertex of m is unique and marked; invariant
/// under positive scaling of phi.
bool pairs_maximally(const MarkedPolytope& m, const Direction& phi);

/// BNS membership of a nonzero rational class for a nice presentation.
/// b1 = 1 queries are rejected: the implemented criterion only covers
/// b1 = 2.
bool bns_member(const Presentation& p, const Direction& phi);

BnsReport bns_arcs(const Presentation& p);

/// Thickness of the invariant polytope (walk route for b1 = 2, interval
/// route for b1 = 1) in the phi-direction.  Negative values only occur
/// for degenerate b1 = 1 presentations of the infinite cyclic group.
Int thickness_of(const Presentation& p, const Direction& phi);

/// thickness + 1, for phi inducing an epimorphism onto Z (checked via
/// the gcd of phi on the generator images).
Int splitting_complexity(const Presentation& p, const Direction& phi);

}  // namespace polygroup
