#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace thompson {

/// Dyadic rational num/2^exp in canonical form: num odd, or num = 0 and
/// exp = 0. Canonical form is unique, so equal values have identical fields.
/// Values are immutable and all arithmetic is exact.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // integers carry exp = 0
  Dyadic(mpz_class numerator, long exponent);

  /// Grammar: `<int>` or `<int>/2^<uint>`, e.g. "-3", "5/2^3".
  static Dyadic parse(const std::string& text);
  std::string str() const;

  const mpz_class& num() const { return num_; }
  long exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const;
  Dyadic mul_pow2(long e) const;  // exact value * 2^e
  mpz_class floor() const;
  long floor_long() const;  // throws if the floor does not fit a long

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

private:
  void canonicalize();

  mpz_class num_{0};
  long exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace thompson
