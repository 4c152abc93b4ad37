#include "polygroup/io.hpp"

#include <algorithm>

#include <limits>

namespace polygroup {

namespace {

long long int_to_ll(const Int& v) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw ValidationError("overflow", "coordinate exceeds the JSON range");
  return v.convert_to<long long>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ValidationError("bad_json",
                          std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json to_json(const LatticePoint& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(int_to_ll(c));
  return arr;
}

Json to_json(const IntegralPolytope& p) {
  Json points = Json::array();
  for (const auto& v : p.vertices()) points.push_back(to_json(v));
  return Json{{"dim", p.dim()}, {"points", points}};
}

Json to_json(const GrothElement& e) {
  return Json{{"pos", to_json(e.pos)}, {"neg", to_json(e.neg)}};
}

Json to_json(const MarkedPolytope& m) {
  Json j = to_json(m.polytope);
  j["marked"] = m.marked;
  return j;
}

Json to_json(const Direction& d) {
  Json arr = Json::array();
  for (const auto& c : d.c) arr.push_back(int_to_ll(c));
  return arr;
}

Json to_json(const FreeWordSum& f) {
  Json arr = Json::array();
  for (const auto& [word, coef] : f.terms())
    arr.push_back(Json{{"coef", coef}, {"word", word.str()}});
  return arr;
}

Json to_json(const BnsReport& r) {
  Json arcs = Json::array();
  for (const auto& arc : r.arcs)
    arcs.push_back(Json::array({to_json(arc.begin), to_json(arc.end)}));
  const char* kind = r.kind == BnsReport::Kind::full_circle ? "full_circle"
                     : r.kind == BnsReport::Kind::empty     ? "empty"
                                                            : "arcs";
  return Json{{"kind", kind}, {"arcs", arcs}};
}

Json presentation_flags_json(const Presentation& p) {
  return Json{{"b1", p.b1},
              {"nice", p.nice()},
              {"nonempty", p.nonempty},
              {"reduced", p.reduced},
              {"cyclically_reduced", p.cyclically_reduced},
              {"proper_power", p.proper_power},
              {"exponent_sums", Json::array({p.ex, p.ey})}};
}

LatticePoint lattice_point_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("bad_json", "a point must be a non-empty array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw ValidationError("bad_json", "coordinates must be integers");
    c.emplace_back(e.get<long long>());
  }
  return LatticePoint(std::move(c));
}

IntegralPolytope polytope_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty())
    throw ValidationError("bad_json", "\"points\" must be a non-empty array");
  std::vector<LatticePoint> points;
  points.reserve(pts.size());
  for (const auto& p : pts) points.push_back(lattice_point_from_json(p));
  const std::size_t dim = field(j, "dim").get<std::size_t>();
  for (const auto& p : points)
    if (p.dim() != dim)
      throw ValidationError("bad_json", "point dimension differs from "
                                        "\"dim\"");
  return IntegralPolytope::hull(points);
}

GrothElement groth_from_json(const Json& j) {
  if (j.is_object() && j.contains("points"))
    return GrothElement::from_polytope(polytope_from_json(j));
  return GrothElement(polytope_from_json(field(j, "pos")),
                      polytope_from_json(field(j, "neg")));
}

MarkedPolytope marked_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  std::vector<LatticePoint> input;
  for (const auto& p : pts) input.push_back(lattice_point_from_json(p));
  IntegralPolytope p = polytope_from_json(j);
  // Marks refer to positions in the input list; re-anchor them onto the
  // canonical vertex order.
  std::vector<std::size_t> marks;
  if (j.contains("marked")) {
    for (const auto& e : j.at("marked")) {
      const std::size_t idx = e.get<std::size_t>();
      if (idx >= input.size())
        throw ValidationError("bad_mark_index",
                              "marked index exceeds the point count");
      const auto& verts = p.vertices();
      const auto it = std::find(verts.begin(), verts.end(), input[idx]);
      if (it == verts.end())
        throw ValidationError("bad_mark_index",
                              "marked point is not a hull vertex");
      marks.push_back(static_cast<std::size_t>(it - verts.begin()));
    }
  }
  return MarkedPolytope(std::move(p), std::move(marks));
}

FreeWordSum word_sum_from_json(const Json& j) {
  if (!j.is_array())
    throw ValidationError("bad_json", "a word sum must be an array");
  FreeWordSum f;
  for (const auto& term : j) {
    const long long coef = field(term, "coef").get<long long>();
    const FreeWord w = parse_word(field(term, "word").get<std::string>());
    f.add_term(w, coef);
  }
  return f;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ValidationError("bad_json",
                          "a matrix must be an array of integer rows");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols)
      throw ValidationError("bad_json", "matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols; ++c)
      m.at(r, c) = Int(j[r][c].get<long long>());
  }
  return m;
}

ChainComplexData chain_data_from_json(const Json& j) {
  const Json& ja = field(j, "a");
  const Json& jb = field(j, "b");
  const Json& jc = field(j, "c");
  if (!ja.is_array() || ja.size() != 2 || !jc.is_array() || jc.size() != 2 ||
      !jb.is_array() || jb.size() != 2 || !jb[0].is_array() ||
      jb[0].size() != 2 || !jb[1].is_array() || jb[1].size() != 2)
    throw ValidationError("bad_json",
                          "chain data needs a[2], b[2][2] and c[2]");
  std::array<FreeWordSum, 2> a{word_sum_from_json(ja[0]),
                               word_sum_from_json(ja[1])};
  std::array<std::array<FreeWordSum, 2>, 2> b{
      std::array<FreeWordSum, 2>{word_sum_from_json(jb[0][0]),
                                 word_sum_from_json(jb[0][1])},
      std::array<FreeWordSum, 2>{word_sum_from_json(jb[1][0]),
                                 word_sum_from_json(jb[1][1])}};
  std::array<FreeWordSum, 2> c{word_sum_from_json(jc[0]),
                               word_sum_from_json(jc[1])};
  return make_chain_data(std::move(a), std::move(b), std::move(c),
                         field(j, "b1").get<int>());
}

}  // namespace polygroup
