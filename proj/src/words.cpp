#include "thompson/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "thompson/generators.hpp"

namespace thompson {

namespace {

AlphabetClass class_of(Family f) {
  switch (f) {
    case Family::X:
      return AlphabetClass::UnitX;
    case Family::GFin:
      return AlphabetClass::UnitGFin;
    case Family::Xt:
    case Family::Y:
    case Family::Gt:
      return AlphabetClass::Line;
    case Family::Rs:
    case Family::Rx:
    case Family::Rg:
      return AlphabetClass::Remark;
  }
  throw std::logic_error("class_of: unreachable");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::Xt: return "xt";
    case Family::Y: return "y";
    case Family::Gt: return "G";
    case Family::GFin: return "g";
    case Family::Rs: return "rs";
    case Family::Rx: return "rx";
    case Family::Rg: return "rG";
  }
  throw std::logic_error("family_name: unreachable");
}

void check_uniform_alphabet(const std::vector<Letter>& letters) {
  if (letters.empty()) return;
  const AlphabetClass cls = class_of(letters.front().sym.family);
  const long level = letters.front().sym.level;
  for (const auto& l : letters) {
    if (class_of(l.sym.family) != cls)
      throw std::invalid_argument("Word: mixed generator alphabets");
    if (cls == AlphabetClass::UnitGFin && l.sym.level != level)
      throw std::invalid_argument("Word: mixed g-family levels");
  }
}

}  // namespace

std::vector<Letter> free_reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  for (const auto& l : raw) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().sym == l.sym) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {
  check_uniform_alphabet(letters_);
}

Word Word::letter(GenSym sym, long exp) { return Word({Letter{sym, exp}}); }

Word Word::operator*(const Word& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(all));
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (auto& l : rev) l.exp = -l.exp;
  return Word(std::move(rev));
}

long Word::length() const {
  long n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

std::optional<AlphabetClass> Word::alphabet() const {
  if (letters_.empty()) return std::nullopt;
  return class_of(letters_.front().sym.family);
}

namespace {

long parse_int(const std::string& s, size_t& pos, const std::string& what) {
  const size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("Word::parse: expected " + what + " in '" + s + "'");
  return std::stol(s.substr(start, pos - start));
}

Letter parse_term(const std::string& term) {
  size_t pos = 0;
  Family fam;
  bool indexed = true;
  // Two-character names first.
  if (term.rfind("rs", 0) == 0) {
    fam = Family::Rs;
    indexed = false;
    pos = 2;
  } else if (term.rfind("rx", 0) == 0) {
    fam = Family::Rx;
    pos = 2;
  } else if (term.rfind("rG", 0) == 0) {
    fam = Family::Rg;
    pos = 2;
  } else if (term.rfind("xt", 0) == 0) {
    fam = Family::Xt;
    pos = 2;
  } else if (term.rfind('x', 0) == 0) {
    fam = Family::X;
    pos = 1;
  } else if (term.rfind('y', 0) == 0) {
    fam = Family::Y;
    pos = 1;
  } else if (term.rfind('G', 0) == 0) {
    fam = Family::Gt;
    pos = 1;
  } else if (term.rfind('g', 0) == 0) {
    fam = Family::GFin;
    pos = 1;
  } else {
    throw std::invalid_argument("Word::parse: unknown generator in '" + term + "'");
  }

  Letter l{GenSym{fam, 0, 0}, 1};
  if (indexed) {
    if (pos >= term.size() || term[pos] != '[')
      throw std::invalid_argument("Word::parse: missing index in '" + term + "'");
    ++pos;
    l.sym.index = parse_int(term, pos, "index");
    if (pos >= term.size() || term[pos] != ']')
      throw std::invalid_argument("Word::parse: missing ']' in '" + term + "'");
    ++pos;
  }
  if (fam == Family::GFin) {
    if (pos >= term.size() || term[pos] != '@')
      throw std::invalid_argument("Word::parse: g-generator needs @<level> in '" + term + "'");
    ++pos;
    l.sym.level = parse_int(term, pos, "level");
  }
  if (pos < term.size() && term[pos] == '^') {
    ++pos;
    l.exp = parse_int(term, pos, "exponent");
  }
  if (pos != term.size())
    throw std::invalid_argument("Word::parse: trailing characters in '" + term + "'");
  return l;
}

}  // namespace

Word Word::parse(const std::string& text) {
  std::vector<Letter> letters;
  std::string term;
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), '*', ' ');
  std::istringstream is(spaced);
  while (is >> term) letters.push_back(parse_term(term));
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << "*";
    first = false;
    os << family_name(l.sym.family);
    if (l.sym.family != Family::Rs) os << "[" << l.sym.index << "]";
    if (l.sym.family == Family::GFin) os << "@" << l.sym.level;
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

Domain realization_domain(const Word& w, Domain empty_default) {
  const auto cls = w.alphabet();
  if (!cls) return empty_default;
  return (*cls == AlphabetClass::UnitX || *cls == AlphabetClass::UnitGFin)
             ? Domain::Unit
             : Domain::Real;
}

PLMap realize(const Word& w, Domain empty_domain) {
  PLMap acc = PLMap::identity(realization_domain(w, empty_domain));
  for (const auto& l : w.letters()) {
    PLMap base;
    switch (l.sym.family) {
      case Family::X: base = gen_x(l.sym.index); break;
      case Family::Xt: base = gen_xt(l.sym.index); break;
      case Family::Y: base = gen_y(l.sym.index); break;
      case Family::Gt: base = gen_Gt(l.sym.index); break;
      case Family::GFin: base = gen_g_finite(l.sym.index, l.sym.level); break;
      case Family::Rs: base = gen_remark_s(); break;
      case Family::Rx: base = gen_remark_x(l.sym.index); break;
      case Family::Rg: base = gen_remark_G(l.sym.index); break;
    }
    acc = compose(acc, power(base, l.exp));
  }
  return acc;
}

bool is_identity(const Word& w) { return realize(w).is_identity(); }

Presentation Presentation::f_x() {
  return {Schema::XShift, IndexSet::Naturals, 0, 0, Family::X, 0};
}
Presentation Presentation::fprime_gt() {
  return {Schema::GRelations, IndexSet::Integers, 0, 0, Family::Gt, 0};
}
Presentation Presentation::d_gt() {
  return {Schema::GRelations, IndexSet::Naturals, 0, 0, Family::Gt, 0};
}
Presentation Presentation::f_g_finite(long n) {
  if (n < 4) throw std::out_of_range("Presentation::f_g_finite: level must be >= 4");
  return {Schema::GRelations, IndexSet::Finite, 0, n, Family::GFin, n};
}
Presentation Presentation::remark_g() {
  return {Schema::GRelations, IndexSet::Integers, 0, 0, Family::Rg, 0};
}

namespace {

void check_window(const Presentation& p, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("relators_for: empty window");
  switch (p.index_set) {
    case Presentation::IndexSet::Naturals:
      if (lo < 0) throw std::out_of_range("relators_for: window outside N");
      break;
    case Presentation::IndexSet::Integers:
      break;
    case Presentation::IndexSet::Finite:
      if (lo < p.lo || hi > p.hi)
        throw std::out_of_range("relators_for: window outside presentation range");
      break;
  }
}

Word sym_word(const Presentation& p, long index, long exp = 1) {
  return Word::letter(GenSym{p.letters, index, p.gfin_level}, exp);
}

}  // namespace

std::vector<Relator> relator_instances(const Presentation& p, long lo, long hi) {
  check_window(p, lo, hi);
  std::vector<Relator> out;
  if (p.schema == Presentation::Schema::XShift) {
    // x_j x_i (x_i x_{j+1})^{-1} for each pair i < j in the window.
    for (long i = lo; i <= hi; ++i)
      for (long j = i + 1; j <= hi; ++j) {
        const Word w = sym_word(p, j) * sym_word(p, i) * sym_word(p, j + 1, -1) *
                       sym_word(p, i, -1);
        out.push_back({"x-shift(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", w});
      }
    return out;
  }
  // g_{i-1} g_i g_{i+1} (g_i g_{i+1} g_{i-1} g_i)^{-1}, all letters inside.
  for (long i = lo + 1; i <= hi - 1; ++i) {
    const Word lhs = sym_word(p, i - 1) * sym_word(p, i) * sym_word(p, i + 1);
    const Word rhs = sym_word(p, i) * sym_word(p, i + 1) * sym_word(p, i - 1) * sym_word(p, i);
    out.push_back({"g-triple(i=" + std::to_string(i) + ")", lhs * rhs.inverse()});
  }
  // [g_i, g_j] for i < j with |i-j| >= 2.
  for (long i = lo; i <= hi; ++i)
    for (long j = i + 2; j <= hi; ++j) {
      const Word w = sym_word(p, i) * sym_word(p, j) * sym_word(p, i, -1) * sym_word(p, j, -1);
      out.push_back({"g-comm(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", w});
    }
  return out;
}

std::vector<Word> relators_for(const Presentation& p, long lo, long hi) {
  std::vector<Word> words;
  for (auto& r : relator_instances(p, lo, hi)) words.push_back(std::move(r.word));
  return words;
}

Word map_x_to_g(const Word& w, long n) {
  if (n < 4) throw std::out_of_range("map_x_to_g: level must be >= 4");
  Word out;
  for (const auto& l : w.letters()) {
    if (l.sym.family != Family::X)
      throw std::invalid_argument("map_x_to_g: expects a word over x letters");
    if (l.sym.index < 0 || l.sym.index > n)
      throw std::out_of_range("map_x_to_g: index outside [0,n]");
    Word image;
    for (long k = l.sym.index; k <= n; ++k)
      image = image * Word::letter(GenSym{Family::GFin, k, n});
    if (l.exp < 0) image = image.inverse();
    for (long rep = 0; rep < std::abs(l.exp); ++rep) out = out * image;
  }
  return out;
}

Word map_g_to_x(const Word& w) {
  Word out;
  for (const auto& l : w.letters()) {
    if (l.sym.family != Family::GFin)
      throw std::invalid_argument("map_g_to_x: expects a word over g letters");
    const long n = l.sym.level;
    const long k = l.sym.index;
    Word image = Word::letter(GenSym{Family::X, k, 0});
    if (k < n) image = image * Word::letter(GenSym{Family::X, k + 1, 0}, -1);
    if (l.exp < 0) image = image.inverse();
    for (long rep = 0; rep < std::abs(l.exp); ++rep) out = out * image;
  }
  return out;
}

}  // namespace thompson
