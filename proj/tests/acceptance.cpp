// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, with the wall-time budget checked per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "oracle.hpp"
#include "thompson/generators.hpp"
#include "thompson/morphisms.hpp"
#include "thompson/verify.hpp"
#include "thompson/words.hpp"

using namespace thompson;

namespace {

int g_failures = 0;

template <typename F>
void criterion(int id, const std::string& desc, double budget_seconds, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= budget_seconds) {
    ok = false;
    note += " (over budget of " + std::to_string(budget_seconds) + " s)";
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s (%.2f s)%s\n", ok ? "PASS" : "FAIL", id, desc.c_str(),
              secs, note.c_str());
}

bool all_relators_trivial(const Presentation& p, long lo, long hi) {
  for (const auto& w : relators_for(p, lo, hi))
    if (!is_identity(w)) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "presentation relator instances all realize to the identity", 10.0, [] {
    bool ok = all_relators_trivial(Presentation::f_x(), 0, 10);
    ok = ok && all_relators_trivial(Presentation::fprime_gt(), -8, 8);
    for (long n = 4; n <= 8; ++n)
      ok = ok && all_relators_trivial(Presentation::f_g_finite(n), 0, n);
    ok = ok && all_relators_trivial(Presentation::remark_g(), -5, 5);
    return ok;
  });

  criterion(2, "negative witnesses: adjacent noncommutation and the rejected y_0", 1.0, [] {
    for (long i = -7; i <= 7; ++i)
      if (commutator(gen_Gt(i), gen_Gt(i + 1)).is_identity()) return false;
    // y_0 := xt_0 breaks y_j y_i = y_i y_{j+1} at (i,j) = (-1,0).
    const PLMap naive_y0 = gen_xt(0);
    const PLMap y_minus1 =
        compose(compose(power(gen_xt(0), 2), gen_xt(1)), power(gen_xt(0), -2));
    const bool violated =
        compose(naive_y0, y_minus1) != compose(y_minus1, gen_xt(1));
    const bool proper_holds =
        compose(gen_y(0), gen_y(-1)) == compose(gen_y(-1), gen_y(1));
    return violated && proper_holds;
  });

  criterion(3, "level conjugation sends g_k to G_k for all 0 <= k <= n, n = 4..8", 5.0, [] {
    const Dyadic half = Dyadic(1).mul_pow2(-1);
    for (long n = 4; n <= 8; ++n)
      for (long k = 0; k <= n; ++k) {
        const PLMap image = conj_phi_n(gen_g_finite(k, n), n);
        if (image != gen_Gt(k)) return false;
        if (image(Dyadic(k)) != Dyadic(k) - half) return false;
        if (image(Dyadic(k) + half) != Dyadic(k)) return false;
      }
    return true;
  });

  criterion(4, "the conjugated generator equals its seven-letter G-word", 1.0, [] {
    if (!verify::check_remark_identity().all_ok()) return false;
    const PLMap lhs = realize(Word::parse("rx[0]^-1*rG[0]*rx[0]"));
    const PLMap rhs =
        realize(Word::parse("rG[3]^-1*rG[2]^-1*rG[1]^-1*rG[0]*rG[1]*rG[2]*rG[3]"));
    return lhs == rhs;
  });

  criterion(5, "200 random word pairs commute after the 2k+2 shift; n=1 fails", 10.0, [] {
    verify::Lemma41Params p;
    p.k_max = 4;
    p.samples = 200;
    const verify::CheckResult r = verify::check_lemma41(p);
    if (!r.all_ok()) return false;
    const Word g0 = Word::parse("G[0]");
    return !commutator(realize(rho(1, g0)), realize(g0)).is_identity();
  });

  criterion(6, "h_{k,n} conjugates G_i to G_{i+n} for |i| <= k and is compact", 5.0, [] {
    for (long k = 0; k <= 5; ++k)
      for (long n = 1; n <= 6; ++n) {
        const PLMap h = make_h(k, n);
        if (!member_of(h, GroupClass::FtildePrime)) return false;
        for (long i = -k; i <= k; ++i)
          if (compose(compose(h.inverse(), gen_Gt(i)), h) != gen_Gt(i + n)) return false;
      }
    return true;
  });

  criterion(7, "even-index generators commute; odd conjugators fix the half-families", 1.0, [] {
    for (long i = -6; i <= 6; i += 2)
      for (long j = i + 2; j <= 6; j += 2)
        if (!commutator(gen_Gt(i), gen_Gt(j)).is_identity()) return false;
    const PLMap g1 = gen_Gt(1), gm1 = gen_Gt(-1);
    for (long i = -3; i < 0; ++i)
      if (compose(compose(g1.inverse(), gen_Gt(2 * i)), g1) != gen_Gt(2 * i)) return false;
    for (long i = 1; i <= 3; ++i)
      if (compose(compose(gm1.inverse(), gen_Gt(2 * i)), gm1) != gen_Gt(2 * i))
        return false;
    return true;
  });

  criterion(8, "infrastructure: group laws, evaluation oracle, round trips, determinism",
            60.0, [] {
              verify::WordSampler rng(99);
              for (int i = 0; i < 1000; ++i) {
                const PLMap a = realize(oracle::random_x_word(rng, 4, 6));
                const PLMap b = realize(oracle::random_x_word(rng, 4, 6));
                const PLMap c = realize(oracle::random_x_word(rng, 4, 6));
                if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
                if (compose(a, PLMap()) != a) return false;
                if (!compose(a, a.inverse()).is_identity()) return false;
              }
              for (int i = 0; i < 1000; ++i) {
                const PLMap f = realize(oracle::random_x_word(rng, 4, 6));
                const PLMap g = realize(oracle::random_x_word(rng, 4, 6));
                if ((f == g) != oracle::pointwise_equal(f, g)) return false;
                if (!oracle::pointwise_equal(f, PLMap::deserialize(f.serialize())))
                  return false;
                const std::string s = conj_phi(f).serialize();
                if (PLMap::deserialize(s).serialize() != s) return false;
              }
              const verify::Report r1 = verify::run_all({});
              const verify::Report r2 = verify::run_all({});
              return r1.all_ok() && r1.records() == r2.records();
            });

  if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
  return g_failures == 0 ? 0 : 1;
}
