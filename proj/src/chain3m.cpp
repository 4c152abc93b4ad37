#include "polygroup/chain3m.hpp"

#include <sstream>

namespace polygroup {

namespace {

// Coefficient sum; for a Fox-derivative entry this is the exponent sum
// of the relator with respect to the generator.
Int augmentation(const FreeWordSum& f) {
  Int s = 0;
  for (const auto& [word, coef] : f.terms()) {
    (void)word;
    s += coef;
  }
  return s;
}

}  // namespace

ChainComplexData make_chain_data(std::array<FreeWordSum, 2> a,
                                 std::array<std::array<FreeWordSum, 2>, 2> b,
                                 std::array<FreeWordSum, 2> c,
                                 int declared_b1) {
  if (declared_b1 != 1 && declared_b1 != 2)
    throw ValidationError("bad_b1", "b1 must be 1 or 2");

  // Rows of the augmented d2 span the relation lattice in Z^2; H is the
  // cokernel modulo torsion.
  const LatticePoint r0({augmentation(b[0][0]), augmentation(b[0][1])});
  const LatticePoint r1({augmentation(b[1][0]), augmentation(b[1][1])});
  const LatticePoint zero = LatticePoint::origin(2);

  int derived_b1;
  AbelianizationMap ab;
  if (r0 == zero && r1 == zero) {
    derived_b1 = 2;
    ab = AbelianizationMap::rank2();
  } else {
    const Int det = r0.c[0] * r1.c[1] - r0.c[1] * r1.c[0];
    if (det != 0)
      throw ValidationError("bad_b1",
                            "the relation lattice has rank 2, so b1 = 0");
    derived_b1 = 1;
    const LatticePoint& r = (r0 == zero) ? r1 : r0;
    Direction v({r.c[1], -r.c[0]});
    v = v.primitive();
    for (const auto& e : v.c) {
      if (e == 0) continue;
      if (e < 0) v = v.negated();
      break;
    }
    ab = AbelianizationMap::rank1(v);
  }
  if (derived_b1 != declared_b1) {
    std::ostringstream os;
    os << "declared b1 = " << declared_b1
       << " but the chain complex abelianizes to b1 = " << derived_b1;
    throw ValidationError("b1_mismatch", os.str());
  }

  ChainComplexData d;
  d.a = std::move(a);
  d.b = std::move(b);
  d.c = std::move(c);
  d.b1 = declared_b1;
  d.ab = ab;
  return d;
}

ChainReport thurston_from_chain(const ChainComplexData& d, bool strict) {
  std::vector<int> valid_i, valid_j;
  for (int i = 1; i <= 2; ++i)
    if (!d.c[i - 1].is_zero()) valid_i.push_back(i);
  for (int j = 1; j <= 2; ++j)
    if (!d.a[j - 1].is_zero()) valid_j.push_back(j);
  if (valid_i.empty())
    throw UnsupportedError("inapplicable",
                           "every entry of the d3 row vanishes; the "
                           "chain-complex formula does not apply");
  if (valid_j.empty())
    throw UnsupportedError("inapplicable",
                           "every entry of the d1 column vanishes; the "
                           "chain-complex formula does not apply");

  auto evaluate = [&](int i, int j) -> GrothElement {
    const FreeWordSum& bb = d.b[2 - i][2 - j];  // b_{3-i,3-j}, 1-based
    if (bb.is_zero()) {
      std::ostringstream os;
      os << "b_" << 3 - i << 3 - j
         << " vanishes in the free-word representation; the input is not "
            "a valid chain complex or a genuine fiber cancels";
      throw UnsupportedError("b_entry_vanishes", os.str());
    }
    const IntegralPolytope pb = newton_polytope(bb, d.ab);
    const IntegralPolytope pc = newton_polytope(d.c[i - 1], d.ab);
    const IntegralPolytope pa = newton_polytope(d.a[j - 1], d.ab);
    return GrothElement(pb, pc + pa);
  };

  ChainReport report(GrothElement::zero(d.ab.rank()));
  report.i = valid_i.front();
  report.j = valid_j.front();
  report.invariant = evaluate(report.i, report.j);
  report.representative = as_polytope(report.invariant);
  report.duality_ok = duality_holds(report.invariant, 3);
  report.strict = strict;
  if (strict) {
    for (int i : valid_i) {
      for (int j : valid_j) {
        if (d.b[2 - i][2 - j].is_zero()) {
          report.strict_vanishing.emplace_back(i, j);
          report.strict_agree = false;
          continue;
        }
        ChainChoice choice{i, j, evaluate(i, j)};
        if (!equivalent(choice.value, report.invariant))
          report.strict_agree = false;
        report.strict_results.push_back(std::move(choice));
      }
    }
  }
  return report;
}

}  // namespace polygroup
