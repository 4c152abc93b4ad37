#pragma once

// Thurston-norm polytope of a closed 3-manifold with a (1,2,2,1)-cell
// structure, read directly off the chain-complex matrices of the
// universal cover.

#include <array>
#include <optional>
#include <vector>

#include "polygroup/groth.hpp"
#include "polygroup/words.hpp"

namespace polygroup {

struct ChainComplexData {
  std::array<FreeWordSum, 2> a;                  // boundary d1 column
  std::array<std::array<FreeWordSum, 2>, 2> b;   // d2
  std::array<FreeWordSum, 2> c;                  // d3 row
  int b1 = 0;
  AbelianizationMap ab;
};

/// Derives the abelianization from the augmented d2 matrix (H is the
/// cokernel of its row lattice, modulo torsion) and cross-checks the
/// declared b1.
ChainComplexData make_chain_data(std::array<FreeWordSum, 2> a,
                                 std::array<std::array<FreeWordSum, 2>, 2> b,
                                 std::array<FreeWordSum, 2> c,
                                 int declared_b1);

struct ChainChoice {
  int i = 0;
  int j = 0;
  GrothElement value;
};

struct ChainReport {
  explicit ChainReport(GrothElement inv) : invariant(std::move(inv)) {}

  GrothElement invariant;  // the Thurston polytope T(N) as a class
  int i = 0;               // chosen indices, 1-based
  int j = 0;
  std::optional<IntegralPolytope> representative;
  bool duality_ok = false;
  bool strict = false;
  std::vector<ChainChoice> strict_results;
  std::vector<std::pair<int, int>> strict_vanishing;  // valid (i,j) with b = 0
  bool strict_agree = true;
};

/// P(b_{3-i,3-j}) - P(c_i) - P(a_j) for the smallest valid indices; in
/// strict mode every valid index pair is evaluated and compared modulo
/// class equality.  Nonvanishing is decided in the free-word
/// representation.
ChainReport thurston_from_chain(const ChainComplexData& d,
                                bool strict = false);

}  // namespace polygroup
