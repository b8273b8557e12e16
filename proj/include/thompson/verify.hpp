#pragma once

#include <string>
#include <vector>

#include "thompson/words.hpp"

namespace thompson::verify {

struct InstanceRow {
  std::string instance;
  bool ok = false;
  std::string detail;  // counterexample or informational note
};

struct CheckResult {
  std::string check;
  std::string params;
  std::vector<InstanceRow> rows;
  double seconds = 0.0;

  int passed() const;
  int failed() const;
  bool all_ok() const { return failed() == 0; }
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_ok() const;
  /// Human-readable rendering, includes wall times.
  std::string text() const;
  /// Machine-readable tab-separated lines `check params instance verdict`,
  /// byte-identical across runs with equal parameters and seed.
  std::string records() const;
};

struct PresentationParams {
  long x_n = 10;
  long g_lo = -8, g_hi = 8;
  long gfin_lo = 4, gfin_hi = 8;
  long remark_lo = -5, remark_hi = 5;
  long neg = 7;  // [G_i, G_{i+1}] != 1 for |i| <= neg
};

struct IsomorphismParams {
  long n_lo = 4, n_hi = 8;
};

struct Lemma41Params {
  long k_max = 4;
  int samples = 200;
  unsigned long long seed = 20240101;
  int max_letters = 6;
};

struct HSigmaParams {
  long k_max = 5;
  long n_max = 6;
  long m_max = 3;
};

struct CostParams {
  long window = 6;
};

struct NoncommuteParams {
  long window = 4;
};

CheckResult check_presentations(const PresentationParams& p = {});
CheckResult check_isomorphisms(const IsomorphismParams& p = {});
CheckResult check_remark_identity();
CheckResult check_lemma41(const Lemma41Params& p = {});
CheckResult check_h_and_sigma(const HSigmaParams& p = {});
CheckResult check_cost_witnesses(const CostParams& p = {});
CheckResult check_noncommute_pattern(const NoncommuteParams& p = {});

struct AllParams {
  PresentationParams presentations;
  IsomorphismParams isomorphisms;
  Lemma41Params lemma41;
  HSigmaParams h_sigma;
  CostParams cost;
  NoncommuteParams noncommute;
};

Report run_all(const AllParams& p = {});

/// Deterministic word sampler used by the randomized checks.
class WordSampler {
public:
  explicit WordSampler(unsigned long long seed) : state_(seed) {}
  unsigned long long next();
  long next_in(long lo, long hi);  // inclusive
  /// Random reduced word over G letters with indices in [-k, k].
  Word g_word(long k, int max_letters);

private:
  unsigned long long state_;
};

}  // namespace thompson::verify
