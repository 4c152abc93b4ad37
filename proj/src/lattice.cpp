#include "polygroup/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace polygroup {

namespace {

void require(bool ok, const char* code, const std::string& detail) {
  if (!ok) throw ValidationError(code, detail);
}

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    std::ostringstream os;
    os << "dimension mismatch: " << a << " vs " << b;
    throw ValidationError("dimension_mismatch", os.str());
  }
}

// z-component of (b - a) x (c - a); sign gives orientation.
Int cross3(const LatticePoint& a, const LatticePoint& b,
           const LatticePoint& c) {
  return (b.c[0] - a.c[0]) * (c.c[1] - a.c[1]) -
         (b.c[1] - a.c[1]) * (c.c[0] - a.c[0]);
}

Int dot2(const Int& ax, const Int& ay, const Int& bx, const Int& by) {
  return ax * bx + ay * by;
}

std::vector<LatticePoint> dedupe_sorted(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Monotone chain; returns CCW vertices starting at the lexicographically
// smallest one.  Collinear points are dropped, so only true hull vertices
// survive.
std::vector<LatticePoint> hull2(std::vector<LatticePoint> pts) {
  pts = dedupe_sorted(std::move(pts));
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[1] < h[0]) std::swap(h[0], h[1]);
  return h;
}

// Phase-1 simplex with Bland's rule over exact rationals: decides whether
// lambda >= 0 with sum(lambda) = 1 and sum(lambda_i * gen_i) = target
// exists.  Artificial columns are dropped once they leave the basis.
bool in_hull_lp(const std::vector<LatticePoint>& gens,
                const std::vector<Rat>& target) {
  const std::size_t n = target.size();
  const std::size_t m = gens.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = m + rows;

  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = Rat(gens[j].c[i]);
    t[i][cols] = target[i];
  }
  for (std::size_t j = 0; j < m; ++j) t[n][j] = 1;
  t[n][cols] = 1;

  for (std::size_t i = 0; i < rows; ++i) {
    if (t[i][cols] < 0)
      for (auto& v : t[i]) v = -v;
    t[i][m + i] = 1;
  }

  std::vector<std::size_t> basis(rows);
  std::vector<bool> dead(cols, false);
  std::vector<Rat> z(cols, 0);
  Rat obj = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    basis[i] = m + i;
    for (std::size_t j = 0; j < m; ++j) z[j] -= t[i][j];
    obj -= t[i][cols];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!dead[j] && z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rat best = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        Rat ratio = t[i][cols] / t[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen in phase 1

    const Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rat f = z[enter];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
      obj -= f * t[leave][cols];
    }
    if (basis[leave] >= m) dead[basis[leave]] = true;
    basis[leave] = enter;
  }
  return obj == 0;
}

// Exact membership for ambient dimension <= 2, on rational coordinates.
bool contains_lowdim(const IntegralPolytope& p, const std::vector<Rat>& x) {
  const auto& v = p.vertices();
  if (p.dim() == 1) {
    return Rat(v.front().c[0]) <= x[0] && x[0] <= Rat(v.back().c[0]);
  }
  auto rcross = [](const Rat& ax, const Rat& ay, const Rat& bx,
                   const Rat& by) { return ax * by - ay * bx; };
  if (v.size() == 1) {
    return x[0] == Rat(v[0].c[0]) && x[1] == Rat(v[0].c[1]);
  }
  if (v.size() == 2) {
    const Rat dx = Rat(v[1].c[0] - v[0].c[0]);
    const Rat dy = Rat(v[1].c[1] - v[0].c[1]);
    const Rat px = x[0] - Rat(v[0].c[0]);
    const Rat py = x[1] - Rat(v[0].c[1]);
    if (rcross(dx, dy, px, py) != 0) return false;
    const Rat t = dx * px + dy * py;
    return t >= 0 && t <= dx * dx + dy * dy;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    const Rat ex = Rat(b.c[0] - a.c[0]);
    const Rat ey = Rat(b.c[1] - a.c[1]);
    const Rat px = x[0] - Rat(a.c[0]);
    const Rat py = x[1] - Rat(a.c[1]);
    if (rcross(ex, ey, px, py) < 0) return false;
  }
  return true;
}

// Integer-only variant used by the erosion inner loop.
bool contains_lattice_lowdim(const IntegralPolytope& p, const LatticePoint& x) {
  const auto& v = p.vertices();
  if (p.dim() == 1) return v.front().c[0] <= x.c[0] && x.c[0] <= v.back().c[0];
  if (v.size() == 1) return v[0] == x;
  if (v.size() == 2) {
    const Int dx = v[1].c[0] - v[0].c[0];
    const Int dy = v[1].c[1] - v[0].c[1];
    const Int px = x.c[0] - v[0].c[0];
    const Int py = x.c[1] - v[0].c[1];
    if (dx * py - dy * px != 0) return false;
    const Int t = dot2(dx, dy, px, py);
    return t >= 0 && t <= dot2(dx, dy, dx, dy);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross3(v[i], v[(i + 1) % v.size()], x) < 0) return false;
  }
  return true;
}

Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& e : v) g = boost::multiprecision::gcd(g, e);
  return g;
}

}  // namespace

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  check_same_dim(a.dim(), b.dim());
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  check_same_dim(a.dim(), b.dim());
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint r = a;
  for (auto& e : r.c) e = -e;
  return r;
}

LatticePoint operator*(const Int& k, const LatticePoint& a) {
  LatticePoint r = a;
  for (auto& e : r.c) e *= k;
  return r;
}

Direction::Direction(std::vector<Int> covector) : c(std::move(covector)) {
  require(!c.empty(), "bad_dimension", "covector must have dimension >= 1");
  bool nonzero = false;
  for (const auto& e : c) nonzero = nonzero || e != 0;
  require(nonzero, "zero_covector", "covector must not be zero");
}

Int Direction::eval(const LatticePoint& p) const {
  check_same_dim(dim(), p.dim());
  Int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * p.c[i];
  return s;
}

Direction Direction::primitive() const {
  const Int g = gcd_all(c);
  Direction r = *this;
  for (auto& e : r.c) e /= g;
  return r;
}

Direction Direction::negated() const {
  Direction r = *this;
  for (auto& e : r.c) e = -e;
  return r;
}

bool Direction::is_primitive() const { return gcd_all(c) == 1; }

IntegralPolytope IntegralPolytope::point(const LatticePoint& v) {
  return hull({v});
}

IntegralPolytope IntegralPolytope::hull(const std::vector<LatticePoint>& pts) {
  require(!pts.empty(), "empty_hull", "hull of an empty point set");
  const std::size_t n = pts[0].dim();
  require(n >= 1, "bad_dimension", "points must have dimension >= 1");
  for (const auto& p : pts) check_same_dim(n, p.dim());

  if (n == 1) {
    LatticePoint lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
      if (p < lo) lo = p;
      if (hi < p) hi = p;
    }
    std::vector<LatticePoint> v{lo};
    if (hi != lo) v.push_back(hi);
    return IntegralPolytope(n, std::move(v));
  }
  if (n == 2) return IntegralPolytope(n, hull2(pts));

  // n >= 3: keep exactly the points not in the hull of the others.
  std::vector<LatticePoint> uniq = dedupe_sorted(pts);
  std::vector<LatticePoint> kept;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<LatticePoint> others;
    others.reserve(uniq.size() - 1);
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    std::vector<Rat> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = Rat(uniq[i].c[k]);
    if (others.empty() || !in_hull_lp(others, x)) kept.push_back(uniq[i]);
  }
  return IntegralPolytope(n, std::move(kept));
}

IntegralPolytope minkowski_sum(const IntegralPolytope& p,
                               const IntegralPolytope& q) {
  check_same_dim(p.dim(), q.dim());
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertex_count() * q.vertex_count());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return IntegralPolytope::hull(sums);
}

IntegralPolytope translate(const IntegralPolytope& p, const LatticePoint& v) {
  check_same_dim(p.dim(), v.dim());
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertex_count());
  for (const auto& a : p.vertices()) pts.push_back(a + v);
  return IntegralPolytope::hull(pts);
}

IntegralPolytope mirror(const IntegralPolytope& p) {
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertex_count());
  for (const auto& a : p.vertices()) pts.push_back(-a);
  return IntegralPolytope::hull(pts);
}

IntegralPolytope dilate(const IntegralPolytope& p, const Int& k) {
  require(k >= 0, "bad_scale", "dilation factor must be >= 0");
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertex_count());
  for (const auto& a : p.vertices()) pts.push_back(k * a);
  return IntegralPolytope::hull(pts);
}

Int support(const IntegralPolytope& p, const Direction& phi) {
  check_same_dim(p.dim(), phi.dim());
  Int best = phi.eval(p.vertices()[0]);
  for (const auto& v : p.vertices()) {
    Int s = phi.eval(v);
    if (s > best) best = s;
  }
  return best;
}

Int thickness(const IntegralPolytope& p, const Direction& phi) {
  return support(p, phi) + support(p, phi.negated());
}

std::vector<LatticePoint> min_face(const IntegralPolytope& p,
                                   const Direction& phi) {
  check_same_dim(p.dim(), phi.dim());
  Int lo = phi.eval(p.vertices()[0]);
  for (const auto& v : p.vertices()) {
    Int s = phi.eval(v);
    if (s < lo) lo = s;
  }
  std::vector<LatticePoint> face;
  for (const auto& v : p.vertices())
    if (phi.eval(v) == lo) face.push_back(v);
  std::sort(face.begin(), face.end());
  return face;
}

IntegralPolytope canonical_translate(const IntegralPolytope& p) {
  LatticePoint lo = p.vertices()[0];
  for (const auto& v : p.vertices())
    if (v < lo) lo = v;
  return translate(p, -lo);
}

bool translation_eq(const IntegralPolytope& p, const IntegralPolytope& q) {
  check_same_dim(p.dim(), q.dim());
  return canonical_translate(p) == canonical_translate(q);
}

std::optional<IntegralPolytope> erode(const IntegralPolytope& p,
                                      const IntegralPolytope& q) {
  check_same_dim(p.dim(), q.dim());
  if (p.dim() > 2)
    throw UnsupportedError("dimension_unsupported",
                           "erosion is implemented for dimension <= 2");
  const std::size_t n = p.dim();

  // Candidate box: componentwise pmin - qmin .. pmax - qmax.
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int pmin = p.vertices()[0].c[i], pmax = pmin;
    for (const auto& v : p.vertices()) {
      if (v.c[i] < pmin) pmin = v.c[i];
      if (v.c[i] > pmax) pmax = v.c[i];
    }
    Int qmin = q.vertices()[0].c[i], qmax = qmin;
    for (const auto& v : q.vertices()) {
      if (v.c[i] < qmin) qmin = v.c[i];
      if (v.c[i] > qmax) qmax = v.c[i];
    }
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (lo[i] > hi[i]) return std::nullopt;
  }

  // x + Q is contained in P iff every vertex of Q shifted by x passes
  // P's halfplane tests.
  std::vector<LatticePoint> feasible;
  if (n == 1) {
    for (Int x = lo[0]; x <= hi[0]; ++x) {
      LatticePoint z({x});
      bool ok = true;
      for (const auto& qv : q.vertices())
        ok = ok && contains_lattice_lowdim(p, z + qv);
      if (ok) feasible.push_back(z);
    }
  } else {
    for (Int x = lo[0]; x <= hi[0]; ++x) {
      for (Int y = lo[1]; y <= hi[1]; ++y) {
        LatticePoint z({x, y});
        bool ok = true;
        for (const auto& qv : q.vertices())
          ok = ok && contains_lattice_lowdim(p, z + qv);
        if (ok) feasible.push_back(z);
      }
    }
  }
  if (feasible.empty()) return std::nullopt;

  IntegralPolytope r = IntegralPolytope::hull(feasible);
  if (minkowski_sum(r, q) != p) return std::nullopt;
  return r;
}

bool contains_point(const IntegralPolytope& p, const std::vector<Rat>& x) {
  check_same_dim(p.dim(), x.size());
  if (p.dim() <= 2) return contains_lowdim(p, x);
  return in_hull_lp(p.vertices(), x);
}

bool contains_point(const IntegralPolytope& p, const LatticePoint& x) {
  std::vector<Rat> r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) r[i] = Rat(x.c[i]);
  return contains_point(p, r);
}

NormalFan normal_arcs(const IntegralPolytope& p) {
  if (p.dim() != 2)
    throw UnsupportedError("dimension_unsupported",
                           "normal fans are implemented for dimension 2");
  NormalFan fan;
  const auto& v = p.vertices();
  if (v.size() == 1) {
    fan.full_circle = true;
    return fan;
  }
  // Outward normal of a CCW edge d is d rotated clockwise.
  auto outward = [](const LatticePoint& from, const LatticePoint& to) {
    return Direction({to.c[1] - from.c[1], from.c[0] - to.c[0]}).primitive();
  };
  if (v.size() == 2) {
    const Direction r = outward(v[0], v[1]);
    fan.arcs.push_back({0, r, r.negated()});
    fan.arcs.push_back({1, r.negated(), r});
    return fan;
  }
  const std::size_t k = v.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t prev = (i + k - 1) % k;
    fan.arcs.push_back({i, outward(v[prev], v[i]), outward(v[i], v[(i + 1) % k])});
  }
  return fan;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

LatticePoint IntMatrix::apply(const LatticePoint& p) const {
  check_same_dim(cols, p.dim());
  std::vector<Int> out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i] += at(i, j) * p.c[j];
  return LatticePoint(std::move(out));
}

IntMatrix IntMatrix::compose(const IntMatrix& inner) const {
  check_same_dim(cols, inner.rows);
  IntMatrix m(rows, inner.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner.cols; ++j)
      for (std::size_t k = 0; k < cols; ++k)
        m.at(i, j) += at(i, k) * inner.at(k, j);
  return m;
}

}  // namespace polygroup
