#include "thompson/verify.hpp"

#include <chrono>
#include <sstream>

#include "thompson/generators.hpp"
#include "thompson/morphisms.hpp"

namespace thompson::verify {

namespace {

std::string one_line(const PLMap& m) {
  std::string s = m.serialize();
  for (auto& c : s)
    if (c == '\n') c = '|';
  return s;
}

std::string counterexample(const Word& w) {
  return "word=" + w.str() + " map=" + one_line(realize(w));
}

void add(CheckResult& r, std::string instance, bool ok, std::string detail = "") {
  r.rows.push_back({std::move(instance), ok, std::move(detail)});
}

template <typename F>
CheckResult timed(std::string name, std::string params, F&& fill) {
  CheckResult r{std::move(name), std::move(params), {}, 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  fill(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string range_str(long lo, long hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

// The rejected extension of the y family: y_0 taken to be the global
// translation xt_0 instead of the conjugate x_0 x_1 x_0^{-1}.
PLMap naive_y(long n) {
  if (n >= 0) return gen_xt(n);
  return compose(compose(power(gen_xt(0), -(n - 1)), gen_xt(1)), power(gen_xt(0), n - 1));
}

}  // namespace

int CheckResult::passed() const {
  int n = 0;
  for (const auto& row : rows) n += row.ok ? 1 : 0;
  return n;
}

int CheckResult::failed() const { return static_cast<int>(rows.size()) - passed(); }

bool Report::all_ok() const {
  for (const auto& c : checks)
    if (!c.all_ok()) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "== " << c.check << " (" << c.params << ") ==\n";
    for (const auto& row : c.rows) {
      os << "  " << (row.ok ? "PASS" : "FAIL") << " " << row.instance;
      if (!row.detail.empty()) os << "  " << row.detail;
      os << "\n";
    }
    os << "  summary: " << c.passed() << " passed, " << c.failed() << " failed  ["
       << c.seconds << " s]\n";
  }
  os << (all_ok() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

std::string Report::records() const {
  std::ostringstream os;
  for (const auto& c : checks)
    for (const auto& row : c.rows)
      os << c.check << "\t" << c.params << "\t" << row.instance << "\t"
         << (row.ok ? "pass" : "fail") << "\n";
  return os.str();
}

unsigned long long WordSampler::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  unsigned long long z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

long WordSampler::next_in(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
}

Word WordSampler::g_word(long k, int max_letters) {
  const long count = next_in(1, max_letters);
  Word w;
  for (long i = 0; i < count; ++i) {
    const long idx = next_in(-k, k);
    long exp = next_in(1, 2);
    if (next_in(0, 1) == 1) exp = -exp;
    w = w * Word::letter(GenSym{Family::Gt, idx, 0}, exp);
  }
  return w;
}

CheckResult check_presentations(const PresentationParams& p) {
  std::string params = "x-n=" + std::to_string(p.x_n) +
                       ";g-window=" + range_str(p.g_lo, p.g_hi) +
                       ";gfin-n=" + range_str(p.gfin_lo, p.gfin_hi) +
                       ";remark-window=" + range_str(p.remark_lo, p.remark_hi) +
                       ";neg=" + std::to_string(p.neg);
  return timed("presentations", params, [&](CheckResult& r) {
    for (const auto& rel : relator_instances(Presentation::f_x(), 0, p.x_n)) {
      const bool ok = is_identity(rel.word);
      add(r, "x:" + rel.name, ok, ok ? "" : counterexample(rel.word));
    }
    for (const auto& rel : relator_instances(Presentation::fprime_gt(), p.g_lo, p.g_hi)) {
      const bool ok = is_identity(rel.word);
      add(r, "Gt:" + rel.name, ok, ok ? "" : counterexample(rel.word));
    }
    for (long n = p.gfin_lo; n <= p.gfin_hi; ++n)
      for (const auto& rel : relator_instances(Presentation::f_g_finite(n), 0, n)) {
        const bool ok = is_identity(rel.word);
        add(r, "g@" + std::to_string(n) + ":" + rel.name, ok,
            ok ? "" : counterexample(rel.word));
      }
    for (const auto& rel :
         relator_instances(Presentation::remark_g(), p.remark_lo, p.remark_hi)) {
      const bool ok = is_identity(rel.word);
      add(r, "rG:" + rel.name, ok, ok ? "" : counterexample(rel.word));
    }
    // Adjacent generators must not commute.
    for (long i = -p.neg; i <= p.neg; ++i) {
      const bool ok = !commutator(gen_Gt(i), gen_Gt(i + 1)).is_identity();
      add(r, "Gt:noncomm(i=" + std::to_string(i) + ")", ok,
          ok ? "" : "commutator collapsed to the identity");
    }
    // The shortcut y_0 := xt_0 must violate y_j y_i = y_i y_{j+1} at (-1, 0).
    const PLMap lhs = compose(naive_y(0), naive_y(-1));
    const PLMap rhs = compose(naive_y(-1), naive_y(1));
    add(r, "naive-y:eq5-violation(i=-1,j=0)", lhs != rhs,
        lhs != rhs ? "" : "naive substitution unexpectedly satisfied the relation");
  });
}

CheckResult check_isomorphisms(const IsomorphismParams& p) {
  return timed("isomorphisms", "n-range=" + range_str(p.n_lo, p.n_hi), [&](CheckResult& r) {
    const Dyadic half = Dyadic(1).mul_pow2(-1);
    for (long n = p.n_lo; n <= p.n_hi; ++n)
      for (long k = 0; k <= n; ++k) {
        const PLMap image = conj_phi_n(gen_g_finite(k, n), n);
        const PLMap expected = gen_Gt(k);
        const std::string suffix = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        add(r, "eq8" + suffix, image == expected,
            image == expected ? "" : "image=" + one_line(image));
        const bool pts_ok = image(Dyadic(k)) == Dyadic(k) - half &&
                            image(Dyadic(k) + half) == Dyadic(k);
        add(r, "eq8-points" + suffix, pts_ok,
            pts_ok ? "" : "image(k)=" + image(Dyadic(k)).str());
      }
    // Grid spot check phi_n(s_k) = k at the lowest level.
    const long n = p.n_lo;
    for (long k = -1; k <= n + 1; ++k) {
      Dyadic sk;
      if (k == -1)
        sk = Dyadic(0);
      else if (k == n + 1)
        sk = Dyadic(1);
      else
        sk = Dyadic(1) - Dyadic(1).mul_pow2(-k - 1);
      add(r, "phi-n-grid(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
          phi_n_at(n, sk) == Dyadic(k));
    }
    // phi_inf sends the level-independent generators to the same images.
    for (long k = 0; k < p.n_hi; ++k) {
      const PLMap image = conj_phi_inf(gen_g_finite(k, p.n_hi));
      add(r, "phi-inf-g(k=" + std::to_string(k) + ")", image == gen_Gt(k));
    }
    // Conjugates of maps trivial near 1 land in some F(-1, k+1).
    WordSampler rng(7);
    for (int t = 0; t < 5; ++t) {
      Word w;
      const long count = rng.next_in(1, 4);
      for (long i = 0; i < count; ++i)
        w = w * Word::letter(GenSym{Family::GFin, rng.next_in(0, p.n_hi - 1), p.n_hi},
                             rng.next_in(0, 1) == 0 ? 1 : -1);
      const PLMap f = realize(w, Domain::Unit);
      bool ok = member_of(f, GroupClass::D);
      if (ok) {
        const PLMap h = conj_phi_inf(f);
        const auto supp = h.support();
        ok = member_of(h, GroupClass::FtildePrime) && (!supp || supp->lo >= Dyadic(-1));
      }
      add(r, "phi-inf-D-sample(t=" + std::to_string(t) + ")", ok,
          ok ? "" : counterexample(w));
    }
  });
}

CheckResult check_remark_identity() {
  return timed("remark-identity", "fixed", [&](CheckResult& r) {
    auto g = [](long i) {
      if (i == 4) return Word::parse("rx[4]");
      return Word::parse("rx[" + std::to_string(i) + "]*rx[" + std::to_string(i + 1) +
                         "]^-1");
    };
    const Word lines[] = {
        Word::parse("rx[0]^-1*rG[0]*rx[0]"),
        Word::parse("rx[1]^-1*rx[0]"),
        g(4).inverse() * g(3).inverse() * g(2).inverse() * g(1).inverse() * g(0) * g(1) *
            g(2) * g(3) * g(4),
        g(3).inverse() * g(2).inverse() * g(4).inverse() * g(3).inverse() * g(1).inverse() *
            g(0) * g(1) * g(3) * g(4) * g(2) * g(3),
        g(3).inverse() * g(2).inverse() * g(1).inverse() * g(0) * g(1) * g(2) * g(3),
        Word::parse("rG[3]^-1*rG[2]^-1*rG[1]^-1*rG[0]*rG[1]*rG[2]*rG[3]"),
    };
    PLMap prev = realize(lines[0]);
    for (int i = 1; i < 6; ++i) {
      const PLMap cur = realize(lines[i]);
      add(r, "line(" + std::to_string(i) + ")", prev == cur,
          prev == cur ? "" : counterexample(lines[i]));
      prev = cur;
    }
    for (long i = -2; i <= 2; ++i) {
      const Word shifted = Word::parse("rs^-1*rG[" + std::to_string(i) + "]*rs");
      const bool ok = realize(shifted) == gen_remark_G(i + 1);
      add(r, "s-shift(i=" + std::to_string(i) + ")", ok, ok ? "" : counterexample(shifted));
    }
  });
}

CheckResult check_lemma41(const Lemma41Params& p) {
  std::string params = "k-max=" + std::to_string(p.k_max) +
                       ";samples=" + std::to_string(p.samples) +
                       ";seed=" + std::to_string(p.seed);
  return timed("lemma41", params, [&](CheckResult& r) {
    WordSampler rng(p.seed);
    for (int t = 0; t < p.samples; ++t) {
      const long k = rng.next_in(0, p.k_max);
      const Word g = rng.g_word(k, p.max_letters);
      const Word h = rng.g_word(k, p.max_letters);
      const long n = 2 * k + 2;
      const PLMap hm = realize(h, Domain::Real);
      const bool ok = commutator(realize(rho(n, g), Domain::Real), hm).is_identity();
      long min_n = 0;
      while (min_n < n &&
             !commutator(realize(rho(min_n, g), Domain::Real), hm).is_identity())
        ++min_n;
      add(r, "sample(t=" + std::to_string(t) + ",k=" + std::to_string(k) + ")", ok,
          ok ? "min-commuting-n=" + std::to_string(min_n)
             : "g=" + g.str() + " h=" + h.str());
    }
    const Word g0 = Word::parse("G[0]");
    add(r, "witness-n1-noncommute",
        !commutator(realize(rho(1, g0)), realize(g0)).is_identity());
    add(r, "empty-word-commutes",
        commutator(realize(rho(2, Word()), Domain::Real), realize(g0)).is_identity());
  });
}

CheckResult check_h_and_sigma(const HSigmaParams& p) {
  std::string params = "k-max=" + std::to_string(p.k_max) + ";n-max=" +
                       std::to_string(p.n_max) + ";m-max=" + std::to_string(p.m_max);
  return timed("h-sigma", params, [&](CheckResult& r) {
    for (long k = 0; k <= p.k_max; ++k)
      for (long n = 1; n <= p.n_max; ++n) {
        const PLMap h = make_h(k, n);
        const std::string kn = "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
        const bool compact = member_of(h, GroupClass::FtildePrime) &&
                             member_of_interval(h, {Dyadic(-k - 2), Dyadic(n + k + 2)});
        add(r, "h-compact" + kn, compact, compact ? "" : one_line(h));
        const bool plateau = h(Dyadic(n - k - 1)) == Dyadic(-k - 1) &&
                             h(Dyadic(n)) == Dyadic(0) &&
                             h(Dyadic(n + k + 1)) == Dyadic(k + 1);
        add(r, "h-plateau" + kn, plateau, plateau ? "" : one_line(h));
        for (long i = -k; i <= k; ++i) {
          const PLMap conj = compose(compose(h.inverse(), gen_Gt(i)), h);
          const bool ok = conj == gen_Gt(i + n);
          add(r, "eq12" + kn + "(i=" + std::to_string(i) + ")", ok,
              ok ? "" : "conjugate=" + one_line(conj));
        }
      }
    for (long m = 1; m <= p.m_max; ++m) {
      const std::string ms = "(m=" + std::to_string(m) + ")";
      add(r, "sigma-identity" + ms,
          sigma(m, PLMap::identity(Domain::Real)).is_identity());
      for (long i = -m; i <= m; ++i) {
        const bool ok = sigma(m, gen_Gt(i)) == gen_Gt(i + 2 * m + 2);
        add(r, "sigma-shift" + ms + "(i=" + std::to_string(i) + ")", ok);
      }
      WordSampler rng(100 + static_cast<unsigned long long>(m));
      for (int t = 0; t < 5; ++t) {
        const Word w = rng.g_word(m, 5);
        const bool agree = realize(sigma(m, w), Domain::Real) ==
                           sigma(m, realize(w, Domain::Real));
        add(r, "sigma-word-map" + ms + "(t=" + std::to_string(t) + ")", agree,
            agree ? "" : "w=" + w.str());
        const Word h = rng.g_word(m, 5);
        const bool comm =
            commutator(sigma(m, realize(w, Domain::Real)), realize(h, Domain::Real))
                .is_identity();
        add(r, "sigma-comm" + ms + "(t=" + std::to_string(t) + ")", comm,
            comm ? "" : "g=" + w.str() + " h=" + h.str());
      }
    }
  });
}

CheckResult check_cost_witnesses(const CostParams& p) {
  return timed("cost-witnesses", "window=" + std::to_string(p.window), [&](CheckResult& r) {
    for (long i = -p.window; i <= p.window; i += 2)
      for (long j = i + 2; j <= p.window; j += 2) {
        const bool ok = commutator(gen_Gt(i), gen_Gt(j)).is_identity();
        add(r, "even-comm(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", ok);
      }
    const PLMap g1 = gen_Gt(1), g1i = g1.inverse();
    const PLMap gm1 = gen_Gt(-1), gm1i = gm1.inverse();
    for (long i = -p.window / 2; i < 0; ++i) {
      const PLMap conj = compose(compose(g1i, gen_Gt(2 * i)), g1);
      add(r, "fix-g1(i=" + std::to_string(i) + ")", conj == gen_Gt(2 * i));
    }
    for (long i = 1; i <= p.window / 2; ++i) {
      const PLMap conj = compose(compose(gm1i, gen_Gt(2 * i)), gm1);
      add(r, "fix-g-1(i=" + std::to_string(i) + ")", conj == gen_Gt(2 * i));
    }
  });
}

CheckResult check_noncommute_pattern(const NoncommuteParams& p) {
  return timed("noncommute", "window=" + std::to_string(p.window), [&](CheckResult& r) {
    for (long i = -p.window; i <= p.window; ++i) {
      const bool ok = !commutator(gen_Gt(3 * i), gen_Gt(3 * i + 1)).is_identity();
      add(r, "noncomm-3i(i=" + std::to_string(i) + ")", ok);
    }
    for (long i = -p.window; i <= p.window; ++i)
      for (long j = i + 2; j <= i + 3; ++j) {
        const bool ok = commutator(gen_Gt(i), gen_Gt(j)).is_identity();
        add(r, "comm(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", ok);
      }
  });
}

Report run_all(const AllParams& p) {
  Report report;
  report.checks.push_back(check_cost_witnesses(p.cost));
  report.checks.push_back(check_h_and_sigma(p.h_sigma));
  report.checks.push_back(check_isomorphisms(p.isomorphisms));
  report.checks.push_back(check_lemma41(p.lemma41));
  report.checks.push_back(check_noncommute_pattern(p.noncommute));
  report.checks.push_back(check_presentations(p.presentations));
  report.checks.push_back(check_remark_identity());
  return report;
}

}  // namespace thompson::verify
