#pragma once

// JSON schemas for the library types.  These are the wire formats of the
// CLI; emitted JSON always re-parses to an equal (or class-equal) value.
//
//   polytope   {"dim": n, "points": [[int, ...], ...]}   canonical list
//   groth      {"pos": polytope, "neg": polytope}
//   marked     {"dim": n, "points": [...], "marked": [vertex indices]}
//   word sum   [{"coef": int, "word": "xyX"}, ...]
//   bns report {"kind": "full_circle"|"empty"|"arcs", "arcs": [[[a,b],[c,d]], ...]}
//   chain data {"a": [ws, ws], "b": [[ws, ws], [ws, ws]], "c": [ws, ws], "b1": 1|2}

#include <json.hpp>

#include "polygroup/bns.hpp"
#include "polygroup/chain3m.hpp"
#include "polygroup/groth.hpp"
#include "polygroup/marked.hpp"

namespace polygroup {

using Json = nlohmann::json;

Json to_json(const LatticePoint& p);
Json to_json(const IntegralPolytope& p);
Json to_json(const GrothElement& e);
Json to_json(const MarkedPolytope& m);
Json to_json(const Direction& d);
Json to_json(const FreeWordSum& f);
Json to_json(const BnsReport& r);
Json presentation_flags_json(const Presentation& p);

LatticePoint lattice_point_from_json(const Json& j);
IntegralPolytope polytope_from_json(const Json& j);

/// Accepts {"pos","neg"} or a bare polytope (embedded as (P, point)).
GrothElement groth_from_json(const Json& j);
MarkedPolytope marked_from_json(const Json& j);
FreeWordSum word_sum_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
ChainComplexData chain_data_from_json(const Json& j);

}  // namespace polygroup
