#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thompson/dyadic.hpp"

namespace thompson {

enum class Domain { Unit, Real };

struct BreakPoint {
  Dyadic x, y;
  bool operator==(const BreakPoint&) const = default;
};

/// Closed dyadic interval [lo, hi], lo < hi.
struct Interval {
  Dyadic lo, hi;
  bool operator==(const Interval&) const = default;
};

/// Group classes recognised by member_of. Ftilde is the real-line model,
/// FtildePrime its commutator (compactly supported maps), D the unit-interval
/// maps that are trivial near 1. F(a,b) is handled by member_of_interval.
enum class GroupClass { F, Ftilde, FtildePrime, D };

/// Piecewise-linear homeomorphism with dyadic breakpoints and power-of-2
/// slopes, either of [0,1] (fixing 0 and 1, endpoints implicit) or of the
/// real line with integer-translation tails.
///
/// Instances are immutable and canonical: no stored breakpoint is collinear
/// with its neighbours, so two maps are pointwise equal iff their
/// representations are identical. Constructors validate every invariant and
/// throw std::invalid_argument on violations.
class PLMap {
public:
  PLMap() : domain_(Domain::Unit) {}  // unit identity

  static PLMap identity(Domain d);
  static PLMap unit(std::vector<BreakPoint> pts);
  static PLMap real(std::vector<BreakPoint> pts, long left_shift, long right_shift);
  static PLMap translation(long c);  // real line, t + c

  Domain domain() const { return domain_; }
  const std::vector<BreakPoint>& points() const { return pts_; }
  long left_shift() const { return left_; }
  long right_shift() const { return right_; }
  bool is_identity() const;

  Dyadic operator()(const Dyadic& t) const;
  Dyadic inverse_at(const Dyadic& v) const;

  PLMap inverse() const;
  friend PLMap compose(const PLMap& u, const PLMap& v);  // t -> u(v(t))

  bool operator==(const PLMap&) const = default;

  /// Smallest closed interval outside which the map is the identity;
  /// nullopt for the identity. Real-line maps must have zero tails.
  std::optional<Interval> support() const;

  /// log2 of the slope of the first/last segment of a unit map.
  long slope_exp_at_zero() const;
  long slope_exp_at_one() const;

  std::string serialize() const;
  static PLMap deserialize(const std::string& text);

private:
  PLMap(Domain d, std::vector<BreakPoint> pts, long left, long right);

  Domain domain_;
  std::vector<BreakPoint> pts_;
  long left_ = 0, right_ = 0;  // real-line tails: t + left_ / t + right_
};

PLMap compose(const PLMap& u, const PLMap& v);
PLMap power(const PLMap& f, long e);

bool member_of(const PLMap& f, GroupClass cls);
/// Membership in F(a, b): real-line maps that are the identity outside (a, b).
bool member_of_interval(const PLMap& f, const Interval& ab);

/// Deterministic order-preserving PL bijection src -> dst with dyadic
/// breakpoints and power-of-2 slopes, returned as the breakpoint list
/// including both endpoints. Both interval lengths are written as decreasing
/// binary expansions; the largest term of the shorter list (leftmost on
/// ties) is split in two until the term counts agree, and terms are then
/// paired in order.
std::vector<BreakPoint> dyadic_interpolate(const Interval& src, const Interval& dst);

}  // namespace thompson
