#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thompson/plmap.hpp"

namespace thompson {

/// Generator alphabets. Names in the word grammar: x[i], xt[i], y[i], G[i],
/// g[k]@n, rs, rx[i], rG[i].
enum class Family { X, Xt, Y, Gt, GFin, Rs, Rx, Rg };

/// Words may freely mix letters that realize in one model: {x}, {g@n} for a
/// single n, {xt, y, G}, and {rs, rx, rG}. Anything else is rejected.
enum class AlphabetClass { UnitX, UnitGFin, Line, Remark };

struct GenSym {
  Family family;
  long index = 0;  // ignored for rs
  long level = 0;  // the n of g[k]@n; 0 otherwise
  auto operator<=>(const GenSym&) const = default;
};

struct Letter {
  GenSym sym;
  long exp = 1;  // never 0 in a reduced word
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word over a single alphabet class. Immutable.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces and validates
  static Word letter(GenSym sym, long exp = 1);

  /// Grammar: term (('*'|space) term)*, term = <name>[<int>]('@'<int>)?('^'<int>)?
  static Word parse(const std::string& text);
  std::string str() const;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long length() const;  // sum of |exp|

  Word operator*(const Word& o) const;
  Word inverse() const;
  bool operator==(const Word&) const = default;

  std::optional<AlphabetClass> alphabet() const;  // nullopt when empty

private:
  std::vector<Letter> letters_;
};

/// Reduction as a standalone step, for property tests.
std::vector<Letter> free_reduce(std::vector<Letter> raw);

/// Product of the generator realizations, (uv)(t) = u(v(t)).
/// The empty word realizes to the identity of `empty_domain`.
PLMap realize(const Word& w, Domain empty_domain = Domain::Unit);
bool is_identity(const Word& w);

Domain realization_domain(const Word& w, Domain empty_default = Domain::Unit);

/// One of the paper's presentations: a relator schema over an index set,
/// with a concrete letter family for realization.
struct Presentation {
  enum class Schema { XShift, GRelations };
  enum class IndexSet { Naturals, Integers, Finite };

  Schema schema;
  IndexSet index_set;
  long lo = 0, hi = 0;  // Finite only
  Family letters;
  long gfin_level = 0;

  static Presentation f_x();                 // x_j x_i = x_i x_{j+1} over N
  static Presentation fprime_gt();           // relations (triple/comm) over Z, G letters
  static Presentation d_gt();                // same relations over N
  static Presentation f_g_finite(long n);    // same relations over [0,n], g@n letters
  static Presentation remark_g();            // same relations over Z, rG letters
};

struct Relator {
  std::string name;  // e.g. "x-shift(i=0,j=1)", "g-triple(i=2)", "g-comm(i=0,j=2)"
  Word word;
};

/// Every schema instance with its defining index tuple inside [lo, hi], in
/// lexicographic (schema, tuple) order. X instances are pairs i < j (the
/// relator letter j+1 may exceed the window but stays in the index set);
/// G instances keep every letter index inside the window.
std::vector<Relator> relator_instances(const Presentation& p, long lo, long hi);
std::vector<Word> relators_for(const Presentation& p, long lo, long hi);

/// Substitutions from the level-n presentations: x_k -> g_k g_{k+1} ... g_n
/// and g_k -> x_k x_{k+1}^{-1} (g_n -> x_n). Composing the two fixes every
/// generator after free reduction.
Word map_x_to_g(const Word& w, long n);
Word map_g_to_x(const Word& w);

}  // namespace thompson
