#include "polygroup/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polygroup {

namespace {

constexpr long long kMaxExponent = 100000;

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "syntax error at position " << pos << ": " << what;
  throw ValidationError("syntax_error", os.str());
}

bool raw_reduced(const std::vector<Letter>& raw) {
  for (std::size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i].inverse_of(raw[i + 1])) return false;
  return true;
}

bool raw_cyclically_reduced(const std::vector<Letter>& raw) {
  if (!raw_reduced(raw)) return false;
  return raw.size() < 2 || !raw.front().inverse_of(raw.back());
}

}  // namespace

FreeWord FreeWord::reduce(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const auto& l : letters) {
    if (!w.ls_.empty() && w.ls_.back().inverse_of(l))
      w.ls_.pop_back();
    else
      w.ls_.push_back(l);
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
    w.ls_.push_back({it->gen, -it->sign});
  return w;
}

FreeWord FreeWord::prefix(std::size_t len) const {
  FreeWord w;
  w.ls_.assign(ls_.begin(), ls_.begin() + static_cast<long>(len));
  return w;
}

long long FreeWord::exponent_sum(char gen) const {
  long long s = 0;
  for (const auto& l : ls_)
    if (l.gen == gen) s += l.sign;
  return s;
}

std::string FreeWord::str() const {
  std::string s;
  s.reserve(ls_.size());
  for (const auto& l : ls_)
    s.push_back(l.sign > 0 ? l.gen
                           : static_cast<char>(std::toupper(
                                 static_cast<unsigned char>(l.gen))));
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> cat = a.ls_;
  cat.insert(cat.end(), b.ls_.begin(), b.ls_.end());
  return FreeWord::reduce(cat);
}

FreeWordSum FreeWordSum::of(const FreeWord& w, long long coef) {
  FreeWordSum s;
  s.add_term(w, coef);
  return s;
}

void FreeWordSum::add_term(const FreeWord& w, long long coef) {
  if (coef == 0) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, coef);
  } else {
    it->second += coef;
    if (it->second == 0) t_.erase(it);
  }
}

FreeWordSum FreeWordSum::mul_left(const FreeWord& w) const {
  FreeWordSum s;
  for (const auto& [word, coef] : t_) s.add_term(w * word, coef);
  return s;
}

FreeWordSum FreeWordSum::mul_right(const FreeWord& w) const {
  FreeWordSum s;
  for (const auto& [word, coef] : t_) s.add_term(word * w, coef);
  return s;
}

FreeWordSum operator+(const FreeWordSum& a, const FreeWordSum& b) {
  FreeWordSum s = a;
  for (const auto& [word, coef] : b.t_) s.add_term(word, coef);
  return s;
}

FreeWordSum operator-(const FreeWordSum& a, const FreeWordSum& b) {
  FreeWordSum s = a;
  for (const auto& [word, coef] : b.t_) s.add_term(word, -coef);
  return s;
}

FreeWordSum FreeWordSum::operator-() const {
  FreeWordSum s;
  for (const auto& [word, coef] : t_) s.add_term(word, -coef);
  return s;
}

std::vector<Letter> parse_letters(const std::string& text,
                                  const std::string& alphabet) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      syntax_error(i, std::string("unexpected character '") + ch + "'");
    const char low = static_cast<char>(
        std::tolower(static_cast<unsigned char>(ch)));
    if (alphabet.find(low) == std::string::npos)
      syntax_error(i, std::string("unknown generator '") + ch + "'");
    Letter l{low, std::islower(static_cast<unsigned char>(ch)) ? 1 : -1};
    ++i;
    long long rep = 1;
    if (i < n && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        syntax_error(caret, "expected an integer exponent after '^'");
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > kMaxExponent)
          syntax_error(caret, "exponent too large");
        ++i;
      }
      rep = negative ? -mag : mag;
    }
    if (rep < 0) {
      l.sign = -l.sign;
      rep = -rep;
    }
    for (long long k = 0; k < rep; ++k) out.push_back(l);
  }
  return out;
}

FreeWord parse_word(const std::string& text, const std::string& alphabet) {
  return FreeWord::reduce(parse_letters(text, alphabet));
}

FreeWord cyclic_reduce(const FreeWord& w) {
  std::vector<Letter> ls = w.letters();
  while (ls.size() >= 2 && ls.front().inverse_of(ls.back())) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  // Minimal rotation makes the result a canonical representative of the
  // conjugacy class, invariant under rotating the input.
  const std::size_t n = ls.size();
  if (n <= 1) return FreeWord::reduce(ls);
  std::vector<Letter> best = ls;
  std::vector<Letter> rot = ls;
  for (std::size_t r = 1; r < n; ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return FreeWord::reduce(best);
}

bool is_cyclically_reduced(const FreeWord& w) {
  const auto& ls = w.letters();
  return ls.size() < 2 || !ls.front().inverse_of(ls.back());
}

bool is_proper_power(const FreeWord& w) {
  if (w.empty())
    throw ValidationError("empty_word", "proper-power test of the empty word");
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = ls[i] == ls[i - d];
    if (periodic) return true;
  }
  return false;
}

AbelianizationMap AbelianizationMap::rank2() {
  return AbelianizationMap{IntMatrix::identity(2)};
}

AbelianizationMap AbelianizationMap::rank1(const Direction& covector) {
  IntMatrix m(1, 2);
  m.at(0, 0) = covector.c[0];
  m.at(0, 1) = covector.c[1];
  return AbelianizationMap{m};
}

LatticePoint AbelianizationMap::apply(const FreeWord& w) const {
  return apply_exponents(w.exponent_sum('x'), w.exponent_sum('y'));
}

LatticePoint AbelianizationMap::apply_exponents(long long ex,
                                                long long ey) const {
  return m.apply(LatticePoint({Int(ex), Int(ey)}));
}

Presentation validate_presentation(const std::string& text) {
  // Accept `<x,y|WORD>` or a bare WORD.
  std::string body = text;
  std::size_t first = body.find_first_not_of(" \t\r\n");
  std::size_t last = body.find_last_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ValidationError("empty_relator", "empty presentation text");
  body = body.substr(first, last - first + 1);
  if (body.front() == '<') {
    if (body.back() != '>')
      throw ValidationError("syntax_error",
                            "presentation must be of the form <x,y|WORD>");
    std::string inner = body.substr(1, body.size() - 2);
    const std::size_t bar = inner.find('|');
    if (bar == std::string::npos)
      throw ValidationError("syntax_error",
                            "presentation must be of the form <x,y|WORD>");
    std::string gens = inner.substr(0, bar);
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               gens.end());
    if (gens != "x,y")
      throw ValidationError("bad_generators",
                            "only the generator pair <x,y|...> is admitted");
    body = inner.substr(bar + 1);
  }

  const std::vector<Letter> raw = parse_letters(body);
  if (raw.empty())
    throw ValidationError("empty_relator", "the relator is empty");

  Presentation p;
  p.relator = FreeWord::reduce(raw);
  p.nonempty = true;
  p.reduced = raw_reduced(raw);
  p.cyclically_reduced = raw_cyclically_reduced(raw);
  p.proper_power = p.relator.empty() ? false : is_proper_power(p.relator);
  for (const auto& l : raw) {
    if (l.gen == 'x') p.ex += l.sign;
    if (l.gen == 'y') p.ey += l.sign;
  }
  if (p.ex == 0 && p.ey == 0) {
    p.b1 = 2;
    p.ab = AbelianizationMap::rank2();
  } else {
    p.b1 = 1;
    // Primitive covector vanishing on (ex, ey), first nonzero entry
    // positive for stable serialization.
    Direction v({Int(p.ey), Int(-p.ex)});
    v = v.primitive();
    for (const auto& e : v.c) {
      if (e == 0) continue;
      if (e < 0) v = v.negated();
      break;
    }
    p.ab = AbelianizationMap::rank1(v);
  }
  return p;
}

FreeWordSum fox_derivative(const FreeWord& r, char gen) {
  FreeWordSum d;
  const auto& ls = r.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != gen) continue;
    // d(uv) = du + u dv: the letter at i contributes its prefix, with the
    // inverse letter folded in for negative signs.
    if (ls[i].sign > 0)
      d.add_term(r.prefix(i), 1);
    else
      d.add_term(r.prefix(i + 1), -1);
  }
  return d;
}

std::map<LatticePoint, FreeWordSum> abelianize_fibers(
    const FreeWordSum& f, const AbelianizationMap& ab) {
  std::map<LatticePoint, FreeWordSum> fibers;
  for (const auto& [word, coef] : f.terms())
    fibers[ab.apply(word)].add_term(word, coef);
  for (auto it = fibers.begin(); it != fibers.end();)
    it = it->second.is_zero() ? fibers.erase(it) : std::next(it);
  return fibers;
}

IntegralPolytope newton_polytope(const FreeWordSum& f,
                                 const AbelianizationMap& ab) {
  const auto fibers = abelianize_fibers(f, ab);
  if (fibers.empty())
    throw ValidationError("zero_element",
                          "Newton polytope of the zero element");
  std::vector<LatticePoint> pts;
  pts.reserve(fibers.size());
  for (const auto& [pt, fiber] : fibers) pts.push_back(pt);
  return IntegralPolytope::hull(pts);
}

}  // namespace polygroup
