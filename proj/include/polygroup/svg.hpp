#pragma once

// Deterministic SVG rendering of (marked) polytopes in dimension <= 2:
// fixed 32 px per lattice unit, viewbox = bounding box plus a one-unit
// margin, lattice grid behind the hull, marked vertices filled and
// unmarked vertices hollow.

#include <string>

#include "polygroup/marked.hpp"

namespace polygroup {

std::string render_svg(const MarkedPolytope& m);
std::string render_svg(const IntegralPolytope& p);

}  // namespace polygroup
