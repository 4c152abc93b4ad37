#include "polygroup/marked.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace polygroup {

namespace {

std::string point_str(const LatticePoint& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ",";
    os << p.c[i];
  }
  os << ")";
  return os.str();
}

std::string polytope_str(const IntegralPolytope& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    if (i) os << " ";
    os << point_str(p.vertices()[i]);
  }
  os << "}";
  return os.str();
}

void require_nice(const Presentation& p) {
  if (!p.nice()) {
    std::ostringstream os;
    os << "presentation is not nice:";
    if (!p.nonempty) os << " relator empty;";
    if (!p.reduced) os << " relator not freely reduced;";
    if (!p.cyclically_reduced) os << " relator not cyclically reduced;";
    if (p.b1 != 2) os << " b1 = " << p.b1 << " (need 2);";
    throw ValidationError("not_nice", os.str());
  }
}

void require_valid_b1_1(const Presentation& p) {
  if (!(p.nonempty && p.reduced && p.cyclically_reduced))
    throw ValidationError("invalid_relator",
                          "relator must be nonempty, reduced and "
                          "cyclically reduced");
  if (p.b1 != 1)
    throw ValidationError("wrong_b1", "interval invariant requires b1 = 1");
}

FreeWordSum generator_minus_one(char gen) {
  FreeWordSum s;
  s.add_term(FreeWord::reduce({Letter{gen, 1}}), 1);
  s.add_term(FreeWord(), -1);
  return s;
}

// Unique decomposition of a vertex of m + n into a vertex pair; existence
// and uniqueness hold because the maximizing faces of a vertex direction
// are single vertices.
std::pair<std::size_t, std::size_t> decompose_vertex(
    const IntegralPolytope& m, const IntegralPolytope& n,
    const LatticePoint& v) {
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    for (std::size_t j = 0; j < n.vertex_count(); ++j) {
      if (m.vertices()[i] + n.vertices()[j] == v) {
        if (found)
          throw DiscrepancyError("sum_decomposition",
                                 "vertex " + point_str(v) +
                                     " decomposes in two ways");
        found = {i, j};
      }
    }
  }
  if (!found)
    throw DiscrepancyError("sum_decomposition",
                           "vertex " + point_str(v) + " has no decomposition");
  return *found;
}

}  // namespace

MarkedPolytope::MarkedPolytope(IntegralPolytope p,
                               std::vector<std::size_t> marks)
    : polytope(std::move(p)), marked(std::move(marks)) {
  if (polytope.dim() > 2)
    throw UnsupportedError("dimension_unsupported",
                           "marked polytopes live in dimension <= 2");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  for (std::size_t i : marked) {
    if (i >= polytope.vertex_count())
      throw ValidationError("bad_mark_index",
                            "marked index exceeds the vertex count");
  }
}

bool MarkedPolytope::is_marked(std::size_t vertex_index) const {
  return std::binary_search(marked.begin(), marked.end(), vertex_index);
}

MarkedPolytope marked_from_fibers(
    const std::map<LatticePoint, FreeWordSum>& fibers) {
  if (fibers.empty())
    throw ValidationError("zero_element", "no nonvanishing fibers");
  std::vector<LatticePoint> pts;
  pts.reserve(fibers.size());
  for (const auto& [pt, fiber] : fibers) pts.push_back(pt);
  IntegralPolytope hull = IntegralPolytope::hull(pts);
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i < hull.vertex_count(); ++i) {
    const auto it = fibers.find(hull.vertices()[i]);
    if (it == fibers.end()) continue;
    const auto& terms = it->second.terms();
    if (terms.size() == 1) {
      const long long c = terms.begin()->second;
      if (c == 1 || c == -1) marks.push_back(i);
    }
  }
  return MarkedPolytope(std::move(hull), std::move(marks));
}

MarkedPolytope marked_sum(const MarkedPolytope& m, const MarkedPolytope& n) {
  IntegralPolytope sum = m.polytope + n.polytope;
  std::vector<std::size_t> marks;
  for (std::size_t v = 0; v < sum.vertex_count(); ++v) {
    const auto [i, j] = decompose_vertex(m.polytope, n.polytope,
                                         sum.vertices()[v]);
    if (m.is_marked(i) && n.is_marked(j)) marks.push_back(v);
  }
  return MarkedPolytope(std::move(sum), std::move(marks));
}

MarkedPolytope deconvolve_segment(const MarkedPolytope& s,
                                  const MarkedPolytope& seg) {
  if (!seg.polytope.is_segment() || seg.marked.size() != 2)
    throw ValidationError("bad_segment",
                          "deconvolution needs a segment with both "
                          "endpoints marked");
  auto core = erode(s.polytope, seg.polytope);
  if (!core)
    throw ValidationError("erosion_failed",
                          "no polytope sums with the segment to " +
                              polytope_str(s.polytope));

  // Read each core vertex's mark off its images among s's vertices; the
  // images of one vertex must agree.
  std::vector<int> mark_of(core->vertex_count(), -1);
  for (std::size_t v = 0; v < s.polytope.vertex_count(); ++v) {
    const auto [i, j] =
        decompose_vertex(*core, seg.polytope, s.polytope.vertices()[v]);
    (void)j;
    const int observed = s.is_marked(v) ? 1 : 0;
    if (mark_of[i] == -1) {
      mark_of[i] = observed;
    } else if (mark_of[i] != observed) {
      throw ValidationError("inconsistent_marking",
                            "vertex " + point_str(core->vertices()[i]) +
                                " receives conflicting marks from its "
                                "images");
    }
  }
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i < mark_of.size(); ++i) {
    if (mark_of[i] == -1)
      throw DiscrepancyError("sum_decomposition",
                             "vertex " + point_str(core->vertices()[i]) +
                                 " has no image among the sum's vertices");
    if (mark_of[i] == 1) marks.push_back(i);
  }
  return MarkedPolytope(std::move(*core), std::move(marks));
}

std::vector<LatticePoint> walk_trace(const Presentation& p) {
  require_nice(p);
  std::vector<LatticePoint> trace;
  trace.reserve(p.relator.length() + 1);
  LatticePoint pos = LatticePoint::origin(2);
  trace.push_back(pos);
  for (const auto& l : p.relator.letters()) {
    const std::size_t axis = l.gen == 'x' ? 0 : 1;
    pos.c[axis] += l.sign;
    trace.push_back(pos);
  }
  return trace;
}

IntegralPolytope walk_hull(const Presentation& p) {
  return IntegralPolytope::hull(walk_trace(p));
}

IntegralPolytope walk_polytope(const Presentation& p) {
  const IntegralPolytope hull = walk_hull(p);
  const IntegralPolytope unit_square = IntegralPolytope::hull(
      {LatticePoint({0, 0}), LatticePoint({1, 0}), LatticePoint({1, 1}),
       LatticePoint({0, 1})});
  auto s = erode(hull, unit_square);
  if (!s)
    throw DiscrepancyError("walk_erosion_failed",
                           "the walk hull " + polytope_str(hull) +
                               " is not a unit-square Minkowski summand; "
                               "this cannot happen for nice presentations");
  return *s;
}

MarkedPolytope marked_invariant(const Presentation& p, char route) {
  require_nice(p);
  if (route != 'x' && route != 'y')
    throw ValidationError("bad_route", "route must be 'x' or 'y'");
  const char deriv = route;
  const char paired = route == 'x' ? 'y' : 'x';

  const FreeWordSum dr = fox_derivative(p.relator, deriv);
  const auto dr_fibers = abelianize_fibers(dr, p.ab);
  const auto seg_fibers = abelianize_fibers(generator_minus_one(paired), p.ab);

  MarkedPolytope numerator = marked_from_fibers(dr_fibers);
  MarkedPolytope seg = marked_from_fibers(seg_fibers);

  MarkedPolytope m = [&] {
    try {
      return deconvolve_segment(numerator, seg);
    } catch (const ValidationError& e) {
      throw DiscrepancyError(
          "route_deconvolution_failed",
          std::string("route ") + route + ": " + e.what());
    }
  }();

  const IntegralPolytope walk = walk_polytope(p);
  if (m.polytope != walk) {
    throw DiscrepancyError(
        "route_mismatch",
        std::string("route ") + route + " polytope " +
            polytope_str(m.polytope) + " differs from the walk polytope " +
            polytope_str(walk) +
            "; the free-word fibers misrepresent the group ring here");
  }
  return m;
}

GrothElement interval_invariant(const Presentation& p) {
  require_valid_b1_1(p);
  // Pick the derivative whose paired generator survives in H; ex != 0
  // means y has nonzero image and dr/dx has a term per x-letter.
  char deriv = 0;
  char paired = 0;
  if (p.ex != 0) {
    deriv = 'x';
    paired = 'y';
  } else if (p.ey != 0) {
    deriv = 'y';
    paired = 'x';
  } else {
    throw UnsupportedError("degenerate_routes",
                           "both routes are degenerate");
  }
  const IntegralPolytope num =
      newton_polytope(fox_derivative(p.relator, deriv), p.ab);
  const IntegralPolytope den =
      newton_polytope(generator_minus_one(paired), p.ab);
  return GrothElement(num, den);
}

}  // namespace polygroup
