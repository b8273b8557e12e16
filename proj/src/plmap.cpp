#include "thompson/plmap.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace thompson {

namespace {

// Slope of the segment a -> b as a power of two; throws otherwise. The
// ratio of two positive dyadics is a power of two iff their odd parts agree.
long segment_slope_exp(const BreakPoint& a, const BreakPoint& b) {
  const Dyadic dx = b.x - a.x;
  const Dyadic dy = b.y - a.y;
  if (dx <= Dyadic(0) || dy <= Dyadic(0))
    throw std::invalid_argument("PLMap: breakpoints not strictly increasing");
  const auto tx = static_cast<long>(mpz_scan1(dx.num().get_mpz_t(), 0));
  const auto ty = static_cast<long>(mpz_scan1(dy.num().get_mpz_t(), 0));
  mpz_class ox, oy;
  mpz_fdiv_q_2exp(ox.get_mpz_t(), dx.num().get_mpz_t(), static_cast<mp_bitcnt_t>(tx));
  mpz_fdiv_q_2exp(oy.get_mpz_t(), dy.num().get_mpz_t(), static_cast<mp_bitcnt_t>(ty));
  if (ox != oy)
    throw std::invalid_argument("PLMap: segment slope is not a power of 2");
  return (ty - dy.exp()) - (tx - dx.exp());
}

bool collinear(const BreakPoint& a, const BreakPoint& b, const BreakPoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

Dyadic affine_through(const BreakPoint& a, const BreakPoint& b, const Dyadic& t) {
  return a.y + (t - a.x).mul_pow2(segment_slope_exp(a, b));
}

Dyadic affine_inverse_through(const BreakPoint& a, const BreakPoint& b, const Dyadic& v) {
  return a.x + (v - a.y).mul_pow2(-segment_slope_exp(a, b));
}

}  // namespace

PLMap::PLMap(Domain d, std::vector<BreakPoint> pts, long left, long right)
    : domain_(d), pts_(std::move(pts)), left_(left), right_(right) {
  std::sort(pts_.begin(), pts_.end(),
            [](const BreakPoint& a, const BreakPoint& b) { return a.x < b.x; });
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());

  for (size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i - 1].x == pts_[i].x)
      throw std::invalid_argument("PLMap: two breakpoints share an abscissa");

  if (domain_ == Domain::Unit) {
    left_ = right_ = 0;
    for (const auto& p : pts_)
      if (p.x <= Dyadic(0) || p.x >= Dyadic(1) || p.y <= Dyadic(0) || p.y >= Dyadic(1))
        throw std::invalid_argument("PLMap: unit breakpoints must lie in (0,1)x(0,1)");
  } else if (!pts_.empty()) {
    if (pts_.front().y != pts_.front().x + Dyadic(left_))
      throw std::invalid_argument("PLMap: left tail does not meet first breakpoint");
    if (pts_.back().y != pts_.back().x + Dyadic(right_))
      throw std::invalid_argument("PLMap: right tail does not meet last breakpoint");
  }

  // Canonical form: drop breakpoints collinear with their neighbours, the
  // neighbours of the extremes being the tail lines (real) or the pinned
  // endpoints (unit).
  auto virtual_before = [&](const BreakPoint& p) -> BreakPoint {
    if (domain_ == Domain::Unit) return {Dyadic(0), Dyadic(0)};
    return {p.x - Dyadic(1), p.x - Dyadic(1) + Dyadic(left_)};
  };
  auto virtual_after = [&](const BreakPoint& p) -> BreakPoint {
    if (domain_ == Domain::Unit) return {Dyadic(1), Dyadic(1)};
    return {p.x + Dyadic(1), p.x + Dyadic(1) + Dyadic(right_)};
  };
  // A point stays iff the local slope changes there; the slope on either
  // side is fixed by the immediate original neighbours, so one pass settles it.
  std::vector<BreakPoint> kept;
  kept.reserve(pts_.size());
  for (size_t i = 0; i < pts_.size(); ++i) {
    const BreakPoint prev = kept.empty() ? virtual_before(pts_[i]) : kept.back();
    const BreakPoint next =
        (i + 1 < pts_.size()) ? pts_[i + 1] : virtual_after(pts_[i]);
    if (!collinear(prev, pts_[i], next)) kept.push_back(pts_[i]);
  }
  pts_ = std::move(kept);

  if (domain_ == Domain::Real && pts_.empty() && left_ != right_)
    throw std::invalid_argument("PLMap: real map without breakpoints needs equal tails");

  // Slopes of all final segments must be powers of two (throws otherwise).
  if (!pts_.empty()) {
    if (domain_ == Domain::Unit) {
      segment_slope_exp({Dyadic(0), Dyadic(0)}, pts_.front());
      segment_slope_exp(pts_.back(), {Dyadic(1), Dyadic(1)});
    }
    for (size_t i = 1; i < pts_.size(); ++i) segment_slope_exp(pts_[i - 1], pts_[i]);
  }
}

PLMap PLMap::identity(Domain d) {
  return d == Domain::Unit ? PLMap() : PLMap(Domain::Real, {}, 0, 0);
}

PLMap PLMap::unit(std::vector<BreakPoint> pts) {
  return PLMap(Domain::Unit, std::move(pts), 0, 0);
}

PLMap PLMap::real(std::vector<BreakPoint> pts, long left_shift, long right_shift) {
  return PLMap(Domain::Real, std::move(pts), left_shift, right_shift);
}

PLMap PLMap::translation(long c) { return PLMap(Domain::Real, {}, c, c); }

bool PLMap::is_identity() const {
  return pts_.empty() && left_ == 0 && right_ == 0;
}

Dyadic PLMap::operator()(const Dyadic& t) const {
  if (domain_ == Domain::Unit) {
    if (t < Dyadic(0) || t > Dyadic(1))
      throw std::domain_error("PLMap: argument outside [0,1]");
    if (t == Dyadic(0) || t == Dyadic(1) || pts_.empty()) return t;
    const BreakPoint lo{Dyadic(0), Dyadic(0)}, hi{Dyadic(1), Dyadic(1)};
    auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                               [](const Dyadic& v, const BreakPoint& p) { return v < p.x; });
    const BreakPoint& a = (it == pts_.begin()) ? lo : *(it - 1);
    const BreakPoint& b = (it == pts_.end()) ? hi : *it;
    return affine_through(a, b, t);
  }
  if (pts_.empty() || t <= pts_.front().x) return t + Dyadic(left_);
  if (t >= pts_.back().x) return t + Dyadic(right_);
  auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                             [](const Dyadic& v, const BreakPoint& p) { return v < p.x; });
  return affine_through(*(it - 1), *it, t);
}

Dyadic PLMap::inverse_at(const Dyadic& v) const {
  if (domain_ == Domain::Unit) {
    if (v < Dyadic(0) || v > Dyadic(1))
      throw std::domain_error("PLMap: value outside [0,1]");
    if (v == Dyadic(0) || v == Dyadic(1) || pts_.empty()) return v;
    const BreakPoint lo{Dyadic(0), Dyadic(0)}, hi{Dyadic(1), Dyadic(1)};
    auto it = std::upper_bound(pts_.begin(), pts_.end(), v,
                               [](const Dyadic& w, const BreakPoint& p) { return w < p.y; });
    const BreakPoint& a = (it == pts_.begin()) ? lo : *(it - 1);
    const BreakPoint& b = (it == pts_.end()) ? hi : *it;
    return affine_inverse_through(a, b, v);
  }
  if (pts_.empty() || v <= pts_.front().y) return v - Dyadic(left_);
  if (v >= pts_.back().y) return v - Dyadic(right_);
  auto it = std::upper_bound(pts_.begin(), pts_.end(), v,
                             [](const Dyadic& w, const BreakPoint& p) { return w < p.y; });
  return affine_inverse_through(*(it - 1), *it, v);
}

PLMap PLMap::inverse() const {
  std::vector<BreakPoint> flipped;
  flipped.reserve(pts_.size());
  for (const auto& p : pts_) flipped.push_back({p.y, p.x});
  if (domain_ == Domain::Unit) return PLMap(Domain::Unit, std::move(flipped), 0, 0);
  return PLMap(Domain::Real, std::move(flipped), -left_, -right_);
}

PLMap compose(const PLMap& u, const PLMap& v) {
  if (u.domain_ != v.domain_)
    throw std::invalid_argument("compose: domain mismatch");
  std::vector<Dyadic> xs;
  xs.reserve(u.pts_.size() + v.pts_.size());
  for (const auto& p : v.pts_) xs.push_back(p.x);
  for (const auto& p : u.pts_) xs.push_back(v.inverse_at(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<BreakPoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, u(v(x))});
  if (u.domain_ == Domain::Unit) return PLMap(Domain::Unit, std::move(pts), 0, 0);
  return PLMap(Domain::Real, std::move(pts), u.left_ + v.left_, u.right_ + v.right_);
}

PLMap power(const PLMap& f, long e) {
  if (e < 0) return power(f.inverse(), -e);
  PLMap r = PLMap::identity(f.domain());
  for (long i = 0; i < e; ++i) r = compose(r, f);
  return r;
}

std::optional<Interval> PLMap::support() const {
  if (domain_ == Domain::Real && (left_ != 0 || right_ != 0))
    throw std::domain_error("support: non-compact support");
  if (is_identity()) return std::nullopt;
  // Canonical form: the slope changes at the extreme breakpoints, so the
  // deviation from the identity starts/ends exactly there (or at a pinned
  // endpoint that the map leaves immediately).
  Dyadic lo = pts_.front().x, hi = pts_.back().x;
  if (domain_ == Domain::Unit) {
    if (pts_.front().x != pts_.front().y) lo = Dyadic(0);
    if (pts_.back().x != pts_.back().y) hi = Dyadic(1);
  }
  return Interval{lo, hi};
}

long PLMap::slope_exp_at_zero() const {
  if (domain_ != Domain::Unit)
    throw std::domain_error("slope_exp_at_zero: unit-interval maps only");
  if (pts_.empty()) return 0;
  return segment_slope_exp({Dyadic(0), Dyadic(0)}, pts_.front());
}

long PLMap::slope_exp_at_one() const {
  if (domain_ != Domain::Unit)
    throw std::domain_error("slope_exp_at_one: unit-interval maps only");
  if (pts_.empty()) return 0;
  return segment_slope_exp(pts_.back(), {Dyadic(1), Dyadic(1)});
}

bool member_of(const PLMap& f, GroupClass cls) {
  switch (cls) {
    case GroupClass::F:
      return f.domain() == Domain::Unit;
    case GroupClass::Ftilde:
      return f.domain() == Domain::Real;
    case GroupClass::FtildePrime:
      return f.domain() == Domain::Real && f.left_shift() == 0 && f.right_shift() == 0;
    case GroupClass::D:
      // Identity near 1: the last segment lies on the diagonal.
      return f.domain() == Domain::Unit &&
             (f.points().empty() || f.points().back().x == f.points().back().y);
  }
  return false;
}

bool member_of_interval(const PLMap& f, const Interval& ab) {
  if (ab.lo >= ab.hi) throw std::invalid_argument("member_of_interval: empty interval");
  if (f.domain() != Domain::Real || f.left_shift() != 0 || f.right_shift() != 0)
    return false;
  const auto supp = f.support();
  if (!supp) return true;
  return supp->lo >= ab.lo && supp->hi <= ab.hi;
}

std::string PLMap::serialize() const {
  std::ostringstream os;
  if (domain_ == Domain::Unit) {
    os << "domain: unit\n";
  } else {
    os << "domain: real\n";
    os << "tails: " << left_ << " " << right_ << "\n";
  }
  for (const auto& p : pts_) os << "bp: " << p.x.str() << " " << p.y.str() << "\n";
  return os.str();
}

PLMap PLMap::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  bool have_domain = false;
  Domain d = Domain::Unit;
  long left = 0, right = 0;
  std::vector<BreakPoint> pts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "domain:") {
      std::string which;
      ls >> which;
      if (which == "unit")
        d = Domain::Unit;
      else if (which == "real")
        d = Domain::Real;
      else
        throw std::invalid_argument("PLMap::deserialize: unknown domain '" + which + "'");
      have_domain = true;
    } else if (key == "tails:") {
      if (!(ls >> left >> right))
        throw std::invalid_argument("PLMap::deserialize: bad tails line");
    } else if (key == "bp:") {
      std::string xs, ys;
      if (!(ls >> xs >> ys))
        throw std::invalid_argument("PLMap::deserialize: bad breakpoint line");
      pts.push_back({Dyadic::parse(xs), Dyadic::parse(ys)});
    } else {
      throw std::invalid_argument("PLMap::deserialize: unknown line '" + line + "'");
    }
  }
  if (!have_domain) throw std::invalid_argument("PLMap::deserialize: missing domain line");
  if (d == Domain::Unit) return PLMap::unit(std::move(pts));
  return PLMap::real(std::move(pts), left, right);
}

std::vector<BreakPoint> dyadic_interpolate(const Interval& src, const Interval& dst) {
  if (src.lo >= src.hi || dst.lo >= dst.hi)
    throw std::invalid_argument("dyadic_interpolate: degenerate interval");

  // Decreasing binary expansion of a positive dyadic length.
  auto expand = [](const Dyadic& len) {
    std::vector<Dyadic> terms;
    const mpz_class& n = len.num();
    for (long b = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; b >= 0; --b)
      if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(b)))
        terms.push_back(Dyadic(1).mul_pow2(b - len.exp()));
    return terms;
  };
  std::vector<Dyadic> a = expand(src.hi - src.lo);
  std::vector<Dyadic> b = expand(dst.hi - dst.lo);
  while (a.size() != b.size()) {
    std::vector<Dyadic>& s = (a.size() < b.size()) ? a : b;
    size_t best = 0;
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] > s[best]) best = i;
    const Dyadic half = s[best].mul_pow2(-1);
    s[best] = half;
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(best) + 1, half);
  }

  std::vector<BreakPoint> pts;
  pts.push_back({src.lo, dst.lo});
  Dyadic x = src.lo, y = dst.lo;
  for (size_t i = 0; i < a.size(); ++i) {
    x = x + a[i];
    y = y + b[i];
    pts.push_back({x, y});
  }
  assert(x == src.hi && y == dst.hi);
  // Merge collinear pieces so equal splittings come back as one segment.
  std::vector<BreakPoint> kept;
  for (const auto& p : pts) {
    while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), p))
      kept.pop_back();
    kept.push_back(p);
  }
  return kept;
}

}  // namespace thompson
