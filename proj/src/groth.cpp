#include "polygroup/groth.hpp"

namespace polygroup {

GrothElement::GrothElement(IntegralPolytope p, IntegralPolytope n)
    : pos(std::move(p)), neg(std::move(n)) {
  if (pos.dim() != neg.dim())
    throw ValidationError("dimension_mismatch",
                          "pos and neg must share a dimension");
}

GrothElement GrothElement::from_polytope(const IntegralPolytope& p) {
  return GrothElement(p, IntegralPolytope::point(LatticePoint::origin(p.dim())));
}

GrothElement GrothElement::zero(std::size_t dim) {
  return from_polytope(IntegralPolytope::point(LatticePoint::origin(dim)));
}

bool equivalent(const GrothElement& a, const GrothElement& b) {
  if (a.dim() != b.dim())
    throw ValidationError("dimension_mismatch",
                          "elements live in different dimensions");
  return translation_eq(a.pos + b.neg, b.pos + a.neg);
}

GrothElement operator+(const GrothElement& a, const GrothElement& b) {
  return GrothElement(a.pos + b.pos, a.neg + b.neg);
}

GrothElement operator-(const GrothElement& a) {
  return GrothElement(a.neg, a.pos);
}

GrothElement operator-(const GrothElement& a, const GrothElement& b) {
  return a + (-b);
}

GrothElement scale(const GrothElement& e, long long k) {
  const Int mag = k >= 0 ? k : -k;
  GrothElement d(dilate(e.pos, mag), dilate(e.neg, mag));
  return k >= 0 ? d : -d;
}

GrothElement mirror(const GrothElement& e) {
  return GrothElement(mirror(e.pos), mirror(e.neg));
}

GrothElement symmetrize_double(const GrothElement& e) {
  return e + mirror(e);
}

Int thickness(const GrothElement& e, const Direction& phi) {
  return thickness(e.pos, phi) - thickness(e.neg, phi);
}

std::optional<IntegralPolytope> as_polytope(const GrothElement& e) {
  return erode(e.pos, e.neg);
}

bool is_polytope(const GrothElement& e) { return as_polytope(e).has_value(); }

GrothElement push(const GrothElement& e, const IntMatrix& map) {
  auto apply = [&](const IntegralPolytope& p) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertex_count());
    for (const auto& v : p.vertices()) pts.push_back(map.apply(v));
    return IntegralPolytope::hull(pts);
  };
  return GrothElement(apply(e.pos), apply(e.neg));
}

GrothElement amalgam(const GrothElement& ea, const GrothElement& eb,
                     const GrothElement& ec, const IntMatrix& la,
                     const IntMatrix& lb, const IntMatrix& lc) {
  if (la.rows != lb.rows || la.rows != lc.rows)
    throw ValidationError("dimension_mismatch",
                          "amalgam maps must share a target lattice");
  return push(ea, la) + push(eb, lb) - push(ec, lc);
}

GrothElement fibration_scale(const GrothElement& ek, const IntMatrix& map,
                             long long chi) {
  return scale(push(ek, map), chi);
}

bool duality_holds(const GrothElement& e, long long n) {
  const long long sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
  return equivalent(e, scale(mirror(e), sign));
}

bool s_equivalent(const GrothElement& e, const Direction& phi,
                  const Direction& psi) {
  return min_face(e.pos, phi) == min_face(e.pos, psi) &&
         min_face(e.neg, phi) == min_face(e.neg, psi);
}

}  // namespace polygroup
