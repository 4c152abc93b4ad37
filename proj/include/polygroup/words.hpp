#pragma once

// Free-group words on the two generators x and y: parsing, free and
// cyclic reduction, presentation validation, Fox derivatives,
// abelianization fibers and Newton polytopes.  The word engine itself is
// alphabet-generic; presentations admit only {x, y}.
//
// Grammar: a lowercase letter is a generator, the matching uppercase
// letter its inverse, an optional ^k or ^-k exponent repeats the letter,
// whitespace is ignored.  Presentation text is either `<x,y|WORD>` or a
// bare WORD.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polygroup/lattice.hpp"

namespace polygroup {

struct Letter {
  char gen;
  int sign;  // +1 or -1

  bool inverse_of(const Letter& o) const {
    return gen == o.gen && sign == -o.sign;
  }
  bool operator==(const Letter& o) const {
    return gen == o.gen && sign == o.sign;
  }
  bool operator<(const Letter& o) const {
    if (gen != o.gen) return gen < o.gen;
    return sign > o.sign;  // positive letter before its inverse
  }
};

/// Freely reduced word; the empty sequence is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord reduce(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t length() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  FreeWord inverse() const;
  FreeWord prefix(std::size_t len) const;
  long long exponent_sum(char gen) const;
  std::string str() const;  // xyX notation

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  bool operator==(const FreeWord& o) const { return ls_ == o.ls_; }
  bool operator!=(const FreeWord& o) const { return ls_ != o.ls_; }
  bool operator<(const FreeWord& o) const { return ls_ < o.ls_; }

 private:
  std::vector<Letter> ls_;
};

/// Finite integer combination of reduced words (a group-ring element in
/// its free-word representation).  Distinct reduced words never merge;
/// zero coefficients are dropped.
class FreeWordSum {
 public:
  FreeWordSum() = default;
  static FreeWordSum of(const FreeWord& w, long long coef = 1);

  void add_term(const FreeWord& w, long long coef);
  const std::map<FreeWord, long long>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  FreeWordSum mul_left(const FreeWord& w) const;
  FreeWordSum mul_right(const FreeWord& w) const;

  friend FreeWordSum operator+(const FreeWordSum& a, const FreeWordSum& b);
  friend FreeWordSum operator-(const FreeWordSum& a, const FreeWordSum& b);
  FreeWordSum operator-() const;

  bool operator==(const FreeWordSum& o) const { return t_ == o.t_; }
  bool operator!=(const FreeWordSum& o) const { return t_ != o.t_; }

 private:
  std::map<FreeWord, long long> t_;
};

/// Projection from the generator lattice Z^2 (exponent vectors of x, y)
/// onto H, the torsion-free abelianization: the identity when b1 = 2, a
/// primitive covector vanishing on the relator's exponent vector when
/// b1 = 1.
struct AbelianizationMap {
  IntMatrix m;  // rank x 2

  static AbelianizationMap rank2();
  static AbelianizationMap rank1(const Direction& covector);

  std::size_t rank() const { return m.rows; }
  LatticePoint apply(const FreeWord& w) const;
  LatticePoint apply_exponents(long long ex, long long ey) const;
};

struct Presentation {
  FreeWord relator;
  long long ex = 0;
  long long ey = 0;
  int b1 = 0;
  bool nonempty = false;
  bool reduced = false;
  bool cyclically_reduced = false;
  bool proper_power = false;
  AbelianizationMap ab;

  bool nice() const {
    return nonempty && reduced && cyclically_reduced && b1 == 2;
  }
};

// Raw letter sequence (exponents expanded, no reduction); position-aware
// syntax errors, generators restricted to `alphabet`.
std::vector<Letter> parse_letters(const std::string& text,
                                  const std::string& alphabet = "xy");

FreeWord parse_word(const std::string& text,
                    const std::string& alphabet = "xy");

FreeWord cyclic_reduce(const FreeWord& w);
bool is_cyclically_reduced(const FreeWord& w);
bool is_proper_power(const FreeWord& w);

/// Parse presentation text and compute every validity flag.  Failed
/// reducedness is reported through the flags, not exceptions; only an
/// empty relator or a syntax error throws.
Presentation validate_presentation(const std::string& text);

/// Fox derivative with respect to one generator:
///   d(x)/dx = 1,  d(x^-1)/dx = -x^-1,  d(y)/dx = d(y^-1)/dx = 0,
///   d(uv)/dx = du/dx + u * dv/dx.
FreeWordSum fox_derivative(const FreeWord& r, char gen);

std::map<LatticePoint, FreeWordSum> abelianize_fibers(
    const FreeWordSum& f, const AbelianizationMap& ab);

IntegralPolytope newton_polytope(const FreeWordSum& f,
                                 const AbelianizationMap& ab);

}  // namespace polygroup
