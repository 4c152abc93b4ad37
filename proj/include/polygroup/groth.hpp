#pragma once

// The Grothendieck group of integral polytopes: formal differences with
// cancellation-based equality, group operations, symmetrization,
// thickness, pushforwards and the structural combinators.

#include <optional>

#include "polygroup/lattice.hpp"

namespace polygroup {

/// Formal difference pos - neg of two polytopes of equal dimension.
/// Equality of classes is the cross-sum test `equivalent`; no canonical
/// representative is ever computed.
struct GrothElement {
  IntegralPolytope pos;
  IntegralPolytope neg;

  GrothElement(IntegralPolytope p, IntegralPolytope n);

  static GrothElement from_polytope(const IntegralPolytope& p);
  static GrothElement zero(std::size_t dim);

  std::size_t dim() const { return pos.dim(); }
};

/// (P,Q) ~ (P',Q')  iff  P + Q' and P' + Q are translation-equivalent;
/// sound and complete because Minkowski addition cancels.
bool equivalent(const GrothElement& a, const GrothElement& b);

GrothElement operator+(const GrothElement& a, const GrothElement& b);
GrothElement operator-(const GrothElement& a);
GrothElement operator-(const GrothElement& a, const GrothElement& b);

GrothElement scale(const GrothElement& e, long long k);
GrothElement mirror(const GrothElement& e);

/// e + mirror(e); twice the symmetrization, kept at double scale so the
/// result stays integral.  The output is mirror-symmetric up to
/// `equivalent`.
GrothElement symmetrize_double(const GrothElement& e);

Int thickness(const GrothElement& e, const Direction& phi);

/// The polytope R with e ~ (R, point) when one exists (dim <= 2 only),
/// found by erosion and verified by re-summation.
std::optional<IntegralPolytope> as_polytope(const GrothElement& e);
bool is_polytope(const GrothElement& e);

GrothElement push(const GrothElement& e, const IntMatrix& map);

GrothElement amalgam(const GrothElement& ea, const GrothElement& eb,
                     const GrothElement& ec, const IntMatrix& la,
                     const IntMatrix& lb, const IntMatrix& lc);

GrothElement fibration_scale(const GrothElement& ek, const IntMatrix& map,
                             long long chi);

/// Whether e equals (-1)^(n+1) times its mirror, the symmetry satisfied
/// by invariants of closed aspherical n-manifolds.
bool duality_holds(const GrothElement& e, long long n);

/// Both components have equal phi- and psi-minimal faces.  Evaluated on
/// the representatives as given.
bool s_equivalent(const GrothElement& e, const Direction& phi,
                  const Direction& psi);

}  // namespace polygroup
