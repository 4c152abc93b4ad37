#pragma once

// Shared helpers for the test suites: terse constructors and
// deterministic generators (raw engine output with modulo, so runs are
// reproducible).

#include <cstdint>
#include <random>
#include <vector>

#include "polygroup/bns.hpp"
#include "polygroup/groth.hpp"
#include "polygroup/marked.hpp"
#include "polygroup/words.hpp"

namespace testutil {

using namespace polygroup;

inline LatticePoint pt(const std::vector<long long>& v) {
  return LatticePoint(std::vector<Int>(v.begin(), v.end()));
}

inline IntegralPolytope poly(const std::vector<std::vector<long long>>& pts) {
  std::vector<LatticePoint> points;
  points.reserve(pts.size());
  for (const auto& p : pts) points.push_back(pt(p));
  return IntegralPolytope::hull(points);
}

inline Direction dir(const std::vector<long long>& v) {
  return Direction(std::vector<Int>(v.begin(), v.end()));
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool flip() { return (eng() & 1) != 0; }
};

inline LatticePoint random_point(Rng& r, std::size_t dim, long long lo,
                                 long long hi) {
  std::vector<Int> c(dim);
  for (auto& e : c) e = r.range(lo, hi);
  return LatticePoint(std::move(c));
}

inline IntegralPolytope random_polytope(Rng& r, std::size_t dim,
                                        int max_points, long long lo,
                                        long long hi) {
  const int n = static_cast<int>(r.range(1, max_points));
  std::vector<LatticePoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(random_point(r, dim, lo, hi));
  return IntegralPolytope::hull(pts);
}

inline Direction random_direction(Rng& r, std::size_t dim, long long bound) {
  for (;;) {
    std::vector<Int> c(dim);
    bool nonzero = false;
    for (auto& e : c) {
      e = r.range(-bound, bound);
      nonzero = nonzero || e != 0;
    }
    if (nonzero) return Direction(std::move(c));
  }
}

inline FreeWord random_reduced_word(Rng& r, std::size_t len) {
  std::vector<Letter> ls;
  ls.reserve(len);
  while (ls.size() < len) {
    Letter l{r.flip() ? 'x' : 'y', r.flip() ? 1 : -1};
    if (!ls.empty() && ls.back().inverse_of(l)) continue;
    ls.push_back(l);
  }
  return FreeWord::reduce(ls);
}

// Random nice presentation (zero exponent sums, cyclically reduced, not
// a proper power) by rejection sampling.
inline Presentation random_nice_presentation(Rng& r, std::size_t max_len) {
  for (;;) {
    const std::size_t len =
        4 + 2 * static_cast<std::size_t>(
                    r.range(0, static_cast<long long>((max_len - 4) / 2)));
    const FreeWord w = random_reduced_word(r, len);
    if (w.length() != len) continue;
    if (w.exponent_sum('x') != 0 || w.exponent_sum('y') != 0) continue;
    if (!is_cyclically_reduced(w)) continue;
    if (is_proper_power(w)) continue;
    const Presentation p = validate_presentation(w.str());
    if (p.nice()) return p;
  }
}

inline MarkedPolytope random_marked(Rng& r, std::size_t dim, int max_points,
                                    long long lo, long long hi) {
  IntegralPolytope p = random_polytope(r, dim, max_points, lo, hi);
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    if (r.flip()) marks.push_back(i);
  return MarkedPolytope(std::move(p), std::move(marks));
}

// Fully marked random segment, possibly degenerate in no axis.
inline MarkedPolytope random_marked_segment(Rng& r, std::size_t dim,
                                            long long bound) {
  for (;;) {
    const LatticePoint a = random_point(r, dim, -bound, bound);
    const LatticePoint b = random_point(r, dim, -bound, bound);
    if (a == b) continue;
    IntegralPolytope seg = IntegralPolytope::hull({a, b});
    return MarkedPolytope(std::move(seg), {0, 1});
  }
}

}  // namespace testutil
