#pragma once

#include "thompson/plmap.hpp"

namespace thompson {

// Standard generator families.

/// Unit-interval generator x_n (x_0 = A, x_1 = B); n >= 0.
PLMap gen_x(long n);

/// Real-line generator: gen_xt(0) is t -> t-1, gen_xt(n) for n >= 1 ramps
/// with slope 1/2 on [n-1, n+1] and translates by -1 to the right.
PLMap gen_xt(long n);

/// y_1 = gen_xt(1); every other index follows the recursion
/// y_{n+1} = xt_0^{-1} . y_n . xt_0, in both directions, for any integer n.
PLMap gen_y(long n);

/// Compactly supported generator y_i . y_{i+1}^{-1}, support [i-1, i+1].
PLMap gen_Gt(long i);

/// Finite family at level n >= 4: x_k . x_{k+1}^{-1} for k < n, x_n for k = n.
PLMap gen_g_finite(long k, long n);

// Alternative real-line family: s(t) = t-1, x_i = s^{-i} x_0 s^i with
// x_0 = (t, t/2 on [0,2], t-1), and G_i = x_i . x_{i+1}^{-1}.
PLMap gen_remark_s();
PLMap gen_remark_x(long i);
PLMap gen_remark_G(long i);

// Conjugation isomorphisms. None of the underlying grid maps is
// materialized as a PLMap; conjugation transports breakpoints through the
// finitely many relevant grid cells and reads tail translations off the
// slopes at the endpoints.

/// Unit-interval map to its real-line conjugate (slope 2^a at 0 becomes
/// left tail +a, slope 2^b at 1 becomes right tail -b).
PLMap conj_phi(const PLMap& f);
/// Inverse direction: real-line map back to the unit interval.
PLMap conj_phi_inverse(const PLMap& g);

/// Level-n conjugation (n >= 4) landing in F(-1, n+1).
PLMap conj_phi_n(const PLMap& f, long n);
PLMap conj_phi_n_inverse(const PLMap& g, long n);

/// Maps trivial near 1 (class D) to compactly supported real-line maps,
/// extended by the identity below -1.
PLMap conj_phi_inf(const PLMap& f);

// Exact grid evaluations, exposed for spot checks.
Dyadic phi_at(const Dyadic& t);             // t in (0,1)
Dyadic phi_inv_at(const Dyadic& u);
Dyadic phi_n_at(long n, const Dyadic& t);   // whole real line
Dyadic phi_n_inv_at(long n, const Dyadic& u);
Dyadic phi_inf_at(const Dyadic& t);         // t in [0,1)
Dyadic phi_inf_inv_at(const Dyadic& u);     // u >= -1

}  // namespace thompson
