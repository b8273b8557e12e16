#include "thompson/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace thompson {

namespace {

void check_g_alphabet(const Word& w) {
  for (const auto& l : w.letters())
    if (l.sym.family != Family::Gt && l.sym.family != Family::Rg)
      throw std::invalid_argument("expected a word over a Z-indexed G alphabet");
}

}  // namespace

Word rho(long n, const Word& w) {
  check_g_alphabet(w);
  std::vector<Letter> shifted = w.letters();
  for (auto& l : shifted) l.sym.index += n;
  return Word(std::move(shifted));
}

long support_bound(const Word& w) {
  check_g_alphabet(w);
  long k = 0;
  for (const auto& l : w.letters()) k = std::max(k, std::labs(l.sym.index));
  return k;
}

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

PLMap commutator(const PLMap& u, const PLMap& v) {
  return compose(compose(u, v), compose(u.inverse(), v.inverse()));
}

PLMap make_h(long k, long n) {
  if (k < 0) throw std::out_of_range("make_h: k must be >= 0");
  if (n < 1) throw std::out_of_range("make_h: n must be >= 1");
  // Identity, ramp down, plateau t - n, ramp back up, identity.
  const Interval ramp1_src{Dyadic(-k - 2), Dyadic(n - k - 1)};
  const Interval ramp1_dst{Dyadic(-k - 2), Dyadic(-k - 1)};
  const Interval ramp2_src{Dyadic(n + k + 1), Dyadic(n + k + 2)};
  const Interval ramp2_dst{Dyadic(k + 1), Dyadic(n + k + 2)};
  std::vector<BreakPoint> pts = dyadic_interpolate(ramp1_src, ramp1_dst);
  pts.push_back({Dyadic(n + k + 1), Dyadic(k + 1)});
  const auto ramp2 = dyadic_interpolate(ramp2_src, ramp2_dst);
  pts.insert(pts.end(), ramp2.begin(), ramp2.end());
  return PLMap::real(std::move(pts), 0, 0);
}

Word sigma(long m, const Word& w) {
  if (m < 1) throw std::out_of_range("sigma: m must be >= 1");
  return rho(2 * m + 2, w);
}

PLMap sigma(long m, const PLMap& f) {
  if (m < 1) throw std::out_of_range("sigma: m must be >= 1");
  const PLMap h = make_h(m, 2 * m + 2);
  return compose(compose(h.inverse(), f), h);
}

}  // namespace thompson
