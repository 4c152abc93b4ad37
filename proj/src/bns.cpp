#include "polygroup/bns.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace polygroup {

namespace {

Int cross2(const Direction& a, const Direction& b) {
  return a.c[0] * b.c[1] - a.c[1] * b.c[0];
}

void require_dim2_phi(const Direction& phi) {
  if (phi.dim() != 2)
    throw ValidationError("bad_phi", "phi must have two components here");
}

void require_nice_for_bns(const Presentation& p) {
  if (p.b1 == 1)
    throw UnsupportedError(
        "bns_b1_1_unsupported",
        "BNS queries are only implemented for b1 = 2; the marked-vertex "
        "criterion does not extend to b1 = 1");
  if (!p.nice())
    throw ValidationError("not_nice",
                          "BNS queries require a nice presentation");
}

}  // namespace

bool arc_contains(const BnsArc& arc, const Direction& phi) {
  const Direction b = arc.begin;
  const Direction e = arc.end;
  const Int turn = cross2(b, e);
  if (turn > 0) return cross2(b, phi) > 0 && cross2(phi, e) > 0;
  // Half-circle sector (segment endpoint cone): end = -begin.
  if (turn == 0) return cross2(b, phi) > 0;
  throw DiscrepancyError("reflex_arc",
                         "vertex cones never exceed a half circle");
}

bool pairs_maximally(const MarkedPolytope& m, const Direction& phi) {
  if (phi.dim() != m.polytope.dim())
    throw ValidationError("bad_phi", "phi dimension mismatch");
  const auto& verts = m.polytope.vertices();
  std::size_t best = 0;
  Int best_val = phi.eval(verts[0]);
  bool unique = true;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const Int v = phi.eval(verts[i]);
    if (v > best_val) {
      best = i;
      best_val = v;
      unique = true;
    } else if (v == best_val) {
      unique = false;
    }
  }
  return unique && m.is_marked(best);
}

bool bns_member(const Presentation& p, const Direction& phi) {
  require_nice_for_bns(p);
  require_dim2_phi(phi);
  return pairs_maximally(marked_invariant(p), phi);
}

BnsReport bns_arcs(const Presentation& p) {
  require_nice_for_bns(p);
  const MarkedPolytope m = marked_invariant(p);
  BnsReport report;
  if (m.polytope.is_point()) {
    report.kind = m.is_marked(0) ? BnsReport::Kind::full_circle
                                 : BnsReport::Kind::empty;
    return report;
  }
  const NormalFan fan = normal_arcs(m.polytope);
  for (const auto& arc : fan.arcs) {
    if (m.is_marked(arc.vertex))
      report.arcs.push_back({arc.begin, arc.end});
  }
  report.kind =
      report.arcs.empty() ? BnsReport::Kind::empty : BnsReport::Kind::arcs;
  return report;
}

Int thickness_of(const Presentation& p, const Direction& phi) {
  if (!(p.nonempty && p.reduced && p.cyclically_reduced))
    throw ValidationError("invalid_relator",
                          "relator must be nonempty, reduced and "
                          "cyclically reduced");
  if (p.b1 == 2) {
    require_dim2_phi(phi);
    return thickness(walk_polytope(p), phi);
  }
  if (phi.dim() != 1)
    throw ValidationError("bad_phi", "phi must have one component here");
  return thickness(interval_invariant(p), phi);
}

Int splitting_complexity(const Presentation& p, const Direction& phi) {
  const Int gx = phi.eval(p.ab.apply_exponents(1, 0));
  const Int gy = phi.eval(p.ab.apply_exponents(0, 1));
  if (boost::multiprecision::gcd(gx, gy) != 1)
    throw ValidationError("phi_not_epimorphic",
                          "phi must induce an epimorphism onto Z "
                          "(gcd of the generator images must be 1)");
  return thickness_of(p, phi) + 1;
}

}  // namespace polygroup
