#include "thompson/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace thompson {

namespace {

const Dyadic kHalf = Dyadic(1).mul_pow2(-1);

// Grid of the real-line conjugation: node(m) = 1 - 2^{-m-1} for m >= 0 and
// 2^{m-1} for m <= 0 (both give 1/2 at m = 0).
Dyadic line_node(long m) {
  if (m >= 0) return Dyadic(1) - Dyadic(1).mul_pow2(-m - 1);
  return Dyadic(1).mul_pow2(m - 1);
}

// m with node(m) <= t < node(m+1), for t in (0,1).
long line_cell(const Dyadic& t) {
  long m = 0;
  if (t >= kHalf) {
    while (line_node(m + 1) <= t) ++m;
  } else {
    while (line_node(m) > t) --m;
  }
  return m;
}

long cell_exp(long m) { return (m >= 0) ? (-m - 2) : (m - 1); }  // log2 cell width

}  // namespace

Dyadic phi_at(const Dyadic& t) {
  if (t <= Dyadic(0) || t >= Dyadic(1))
    throw std::domain_error("phi_at: argument outside (0,1)");
  const long m = line_cell(t);
  return Dyadic(m) + (t - line_node(m)).mul_pow2(-cell_exp(m));
}

Dyadic phi_inv_at(const Dyadic& u) {
  const long m = u.floor_long();
  return line_node(m) + (u - Dyadic(m)).mul_pow2(cell_exp(m));
}

namespace {

// Nodes of the level-n grid: s_{-1} = 0, s_k = 1 - 2^{-k-1} for 0 <= k <= n,
// s_{n+1} = 1; affine between nodes, t-1 below, t+n above.
Dyadic level_node(long n, long k) {
  if (k <= -1) return Dyadic(k + 1);
  if (k >= n + 1) return Dyadic(1) + Dyadic(k - n - 1);
  return Dyadic(1) - Dyadic(1).mul_pow2(-k - 1);
}

long level_cell_exp(long n, long k) {  // log2 width of [s_k, s_{k+1}]
  if (k <= -2 || k >= n + 1) return 0;
  if (k == -1) return -1;
  if (k == n) return -n - 1;
  return -k - 2;
}

long level_cell(long n, const Dyadic& t) {
  if (t <= Dyadic(0)) return t.floor_long() - 1;
  if (t >= Dyadic(1)) return (t - Dyadic(1)).floor_long() + n + 1;
  long k = -1;
  while (k + 1 <= n && level_node(n, k + 1) <= t) ++k;
  return k;
}

}  // namespace

Dyadic phi_n_at(long n, const Dyadic& t) {
  const long k = level_cell(n, t);
  return Dyadic(k) + (t - level_node(n, k)).mul_pow2(-level_cell_exp(n, k));
}

Dyadic phi_n_inv_at(long n, const Dyadic& u) {
  const long k = u.floor_long();
  return level_node(n, k) + (u - Dyadic(k)).mul_pow2(level_cell_exp(n, k));
}

namespace {

// Nodes of the one-sided grid on [0,1): gamma_k = 1 - 2^{-k-1} for k >= -1.
Dyadic inf_node(long k) { return Dyadic(1) - Dyadic(1).mul_pow2(-k - 1); }

long inf_cell_exp(long k) { return (k == -1) ? -1 : -k - 2; }

long inf_cell(const Dyadic& t) {
  long k = -1;
  while (inf_node(k + 1) <= t) ++k;
  return k;
}

}  // namespace

Dyadic phi_inf_at(const Dyadic& t) {
  if (t < Dyadic(0) || t >= Dyadic(1))
    throw std::domain_error("phi_inf_at: argument outside [0,1)");
  const long k = inf_cell(t);
  return Dyadic(k) + (t - inf_node(k)).mul_pow2(-inf_cell_exp(k));
}

Dyadic phi_inf_inv_at(const Dyadic& u) {
  if (u < Dyadic(-1)) throw std::domain_error("phi_inf_inv_at: argument below -1");
  const long k = u.floor_long();
  return inf_node(k) + (u - Dyadic(k)).mul_pow2(inf_cell_exp(k));
}

PLMap gen_x(long n) {
  if (n < 0) throw std::out_of_range("gen_x: index must be >= 0");
  // t on [0, 1-2^-n], t/2 + (1-2^-n)/2, t - 2^-n-2, 2t - 1.
  const Dyadic a = Dyadic(1) - Dyadic(1).mul_pow2(-n);          // 1 - 2^-n
  const Dyadic b = Dyadic(1) - Dyadic(1).mul_pow2(-n - 1);      // end of slope-1/2 piece
  const Dyadic c = Dyadic(1) - Dyadic(1).mul_pow2(-n - 2);      // end of shift piece
  std::vector<BreakPoint> pts;
  if (n >= 1) pts.push_back({a, a});
  pts.push_back({b, b.mul_pow2(-1) + a.mul_pow2(-1)});
  pts.push_back({c, c - Dyadic(1).mul_pow2(-n - 2)});
  return PLMap::unit(std::move(pts));
}

PLMap gen_xt(long n) {
  if (n < 0) throw std::out_of_range("gen_xt: index must be >= 0");
  if (n == 0) return PLMap::translation(-1);
  return PLMap::real({{Dyadic(n - 1), Dyadic(n - 1)}, {Dyadic(n + 1), Dyadic(n)}}, 0, -1);
}

PLMap gen_y(long n) {
  const PLMap xt0 = gen_xt(0);
  const PLMap xt0_inv = xt0.inverse();
  PLMap y = gen_xt(1);
  for (long i = 1; i < n; ++i) y = compose(compose(xt0_inv, y), xt0);
  for (long i = 1; i > n; --i) y = compose(compose(xt0, y), xt0_inv);
  return y;
}

PLMap gen_Gt(long i) { return compose(gen_y(i), gen_y(i + 1).inverse()); }

PLMap gen_g_finite(long k, long n) {
  if (n < 4) throw std::out_of_range("gen_g_finite: level must be >= 4");
  if (k < 0 || k > n) throw std::out_of_range("gen_g_finite: index outside [0,n]");
  if (k == n) return gen_x(n);
  return compose(gen_x(k), gen_x(k + 1).inverse());
}

PLMap gen_remark_s() { return PLMap::translation(-1); }

PLMap gen_remark_x(long i) {
  const PLMap x0 = PLMap::real({{Dyadic(0), Dyadic(0)}, {Dyadic(2), Dyadic(1)}}, 0, -1);
  if (i == 0) return x0;
  return compose(compose(PLMap::translation(i), x0), PLMap::translation(-i));
}

PLMap gen_remark_G(long i) {
  return compose(gen_remark_x(i), gen_remark_x(i + 1).inverse());
}

PLMap conj_phi(const PLMap& f) {
  if (f.domain() != Domain::Unit)
    throw std::invalid_argument("conj_phi: expects a unit-interval map");
  if (f.is_identity()) return PLMap::identity(Domain::Real);
  const long a = f.slope_exp_at_zero();
  const long b = f.slope_exp_at_one();
  const auto& bps = f.points();
  // Window of grid cells wide enough that the map is a pure endpoint germ
  // beyond it; everything inside transports pointwise.
  const long mlo = std::min(0L, line_cell(bps.front().x)) - (std::labs(a) + 2);
  const long mhi = std::max(0L, line_cell(bps.back().x) + 1) + (std::labs(b) + 2);
  std::vector<Dyadic> cands;
  for (long m = mlo; m <= mhi; ++m) cands.push_back(line_node(m));
  for (const auto& p : bps) cands.push_back(p.x);
  for (long j = mlo + a; j <= mhi - b; ++j) cands.push_back(f.inverse_at(line_node(j)));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<BreakPoint> pts;
  pts.reserve(cands.size());
  for (const auto& t : cands) pts.push_back({phi_at(t), phi_at(f(t))});
  return PLMap::real(std::move(pts), a, -b);
}

PLMap conj_phi_inverse(const PLMap& g) {
  if (g.domain() != Domain::Real)
    throw std::invalid_argument("conj_phi_inverse: expects a real-line map");
  if (g.is_identity()) return PLMap::identity(Domain::Unit);
  const long a = g.left_shift();
  const long r = g.right_shift();
  long base_lo = 0, base_hi = 0;
  for (const auto& p : g.points()) {
    base_lo = std::min({base_lo, p.x.floor_long(), p.y.floor_long()});
    base_hi = std::max({base_hi, p.x.floor_long() + 1, p.y.floor_long() + 1});
  }
  const long lo = base_lo - (std::labs(a) + 2);
  const long hi = base_hi + (std::labs(r) + 2);
  std::vector<Dyadic> cands;
  for (long m = lo; m <= hi; ++m) cands.push_back(Dyadic(m));
  for (const auto& p : g.points()) cands.push_back(p.x);
  for (long m = lo + a; m <= hi + r; ++m) cands.push_back(g.inverse_at(Dyadic(m)));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<BreakPoint> pts;
  pts.reserve(cands.size());
  for (const auto& u : cands) pts.push_back({phi_inv_at(u), phi_inv_at(g(u))});
  return PLMap::unit(std::move(pts));
}

PLMap conj_phi_n(const PLMap& f, long n) {
  if (f.domain() != Domain::Unit)
    throw std::invalid_argument("conj_phi_n: expects a unit-interval map");
  if (n < 4) throw std::out_of_range("conj_phi_n: level must be >= 4");
  std::vector<Dyadic> cands;
  for (long k = -1; k <= n + 1; ++k) {
    cands.push_back(level_node(n, k));
    cands.push_back(f.inverse_at(level_node(n, k)));
  }
  for (const auto& p : f.points()) cands.push_back(p.x);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<BreakPoint> pts;
  pts.reserve(cands.size());
  for (const auto& t : cands) pts.push_back({phi_n_at(n, t), phi_n_at(n, f(t))});
  return PLMap::real(std::move(pts), 0, 0);
}

PLMap conj_phi_n_inverse(const PLMap& g, long n) {
  if (n < 4) throw std::out_of_range("conj_phi_n_inverse: level must be >= 4");
  if (!member_of_interval(g, {Dyadic(-1), Dyadic(n + 1)}))
    throw std::invalid_argument("conj_phi_n_inverse: map not supported in [-1, n+1]");
  std::vector<Dyadic> cands;
  for (long k = -1; k <= n + 1; ++k) {
    cands.push_back(Dyadic(k));
    cands.push_back(g.inverse_at(Dyadic(k)));
  }
  for (const auto& p : g.points()) cands.push_back(p.x);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<BreakPoint> pts;
  for (const auto& u : cands) {
    if (u <= Dyadic(-1) || u >= Dyadic(n + 1)) continue;
    pts.push_back({phi_n_inv_at(n, u), phi_n_inv_at(n, g(u))});
  }
  return PLMap::unit(std::move(pts));
}

PLMap conj_phi_inf(const PLMap& f) {
  if (!member_of(f, GroupClass::D))
    throw std::invalid_argument("conj_phi_inf: map must be trivial near 1");
  if (f.is_identity()) return PLMap::identity(Domain::Real);
  long top = 0;
  while (inf_node(top) < f.points().back().x) ++top;
  std::vector<Dyadic> cands;
  for (long k = -1; k <= top; ++k) {
    cands.push_back(inf_node(k));
    cands.push_back(f.inverse_at(inf_node(k)));
  }
  for (const auto& p : f.points()) cands.push_back(p.x);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<BreakPoint> pts;
  pts.reserve(cands.size());
  for (const auto& t : cands) pts.push_back({phi_inf_at(t), phi_inf_at(f(t))});
  return PLMap::real(std::move(pts), 0, 0);
}

}  // namespace thompson
