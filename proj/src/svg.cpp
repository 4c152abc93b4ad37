#include "polygroup/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace polygroup {

namespace {

constexpr long long kUnit = 32;  // px per lattice unit
constexpr long long kMargin = 1; // lattice units around the bounding box

long long to_ll(const Int& v) {
  if (v < std::numeric_limits<long long>::min() / (4 * kUnit) ||
      v > std::numeric_limits<long long>::max() / (4 * kUnit))
    throw ValidationError("overflow", "coordinates too large to render");
  return v.convert_to<long long>();
}

}  // namespace

std::string render_svg(const MarkedPolytope& m) {
  const auto& p = m.polytope;
  if (p.dim() > 2)
    throw UnsupportedError("dimension_unsupported",
                           "SVG rendering needs dimension <= 2");

  // Embed dim-1 polytopes on the horizontal axis.
  auto coord = [&](const LatticePoint& v) -> std::pair<long long, long long> {
    return {to_ll(v.c[0]), p.dim() == 2 ? to_ll(v.c[1]) : 0};
  };

  long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& v : p.vertices()) {
    const auto [x, y] = coord(v);
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  xmin -= kMargin;
  ymin -= kMargin;
  xmax += kMargin;
  ymax += kMargin;
  const long long width = (xmax - xmin) * kUnit;
  const long long height = (ymax - ymin) * kUnit;

  // SVG grows downward, the lattice grows upward.
  auto px = [&](long long x) { return (x - xmin) * kUnit; };
  auto py = [&](long long y) { return (ymax - y) * kUnit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";

  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (long long x = xmin; x <= xmax; ++x)
    os << "<line x1=\"" << px(x) << "\" y1=\"0\" x2=\"" << px(x)
       << "\" y2=\"" << height << "\"/>\n";
  for (long long y = ymin; y <= ymax; ++y)
    os << "<line x1=\"0\" y1=\"" << py(y) << "\" x2=\"" << width
       << "\" y2=\"" << py(y) << "\"/>\n";
  os << "</g>\n";

  const auto& verts = p.vertices();
  if (verts.size() >= 3) {
    os << "<polygon fill=\"#e8eefb\" stroke=\"#333333\" stroke-width=\"2\" "
          "points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto [x, y] = coord(verts[i]);
      if (i) os << " ";
      os << px(x) << "," << py(y);
    }
    os << "\"/>\n";
  } else if (verts.size() == 2) {
    const auto [x1, y1] = coord(verts[0]);
    const auto [x2, y2] = coord(verts[1]);
    os << "<line stroke=\"#333333\" stroke-width=\"2\" x1=\"" << px(x1)
       << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\""
       << py(y2) << "\"/>\n";
  }

  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto [x, y] = coord(verts[i]);
    if (m.is_marked(i))
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"6\" fill=\"#000000\"/>\n";
    else
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"6\" fill=\"#ffffff\" stroke=\"#000000\" "
            "stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const IntegralPolytope& p) {
  return render_svg(MarkedPolytope(p, {}));
}

}  // namespace polygroup
