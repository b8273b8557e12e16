#pragma once

#include "thompson/plmap.hpp"
#include "thompson/words.hpp"

namespace thompson {

/// Index shift g_i -> g_{i+n} on a Z-indexed G alphabet (G or rG letters).
/// rho(-n, .) is the inverse shift.
Word rho(long n, const Word& w);

/// Largest |index| over the letters of a G-alphabet word; 0 for the empty word.
long support_bound(const Word& w);

Word commutator(const Word& u, const Word& v);
PLMap commutator(const PLMap& u, const PLMap& v);

/// Conjugator h_{k,n} (k >= 0, n >= 1): equal to t - n on [n-k-1, n+k+1],
/// the identity outside [-k-2, n+k+2], with interpolated ramps in between.
/// Satisfies h^{-1} . G_i . h = G_{i+n} for |i| <= k.
PLMap make_h(long k, long n);

/// sigma_m = ad h_{m,2m+2}^{-1}. On words it shifts indices by 2m+2 (which
/// matches the realized conjugation whenever support_bound(w) <= m); on maps
/// it conjugates by make_h(m, 2m+2).
Word sigma(long m, const Word& w);
PLMap sigma(long m, const PLMap& f);

}  // namespace thompson
