#include "thompson/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace thompson {

Dyadic::Dyadic(mpz_class numerator, long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("Dyadic: exponent must be non-negative");
  canonicalize();
}

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const auto trailing = static_cast<long>(mpz_scan1(num_.get_mpz_t(), 0));
  const long shift = std::min(trailing, exp_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(shift));
    exp_ -= shift;
  }
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  const size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Dyadic Dyadic::parse(const std::string& text) {
  const size_t slash = text.find('/');
  const std::string head = text.substr(0, slash);
  if (!is_integer_token(head))
    throw std::invalid_argument("Dyadic::parse: bad numerator in '" + text + "'");
  long e = 0;
  if (slash != std::string::npos) {
    const std::string tail = text.substr(slash + 1);
    if (tail.size() < 3 || tail[0] != '2' || tail[1] != '^' ||
        !is_integer_token(tail.substr(2)) || tail[2] == '-')
      throw std::invalid_argument("Dyadic::parse: denominator must be 2^<uint> in '" +
                                  text + "'");
    try {
      e = std::stol(tail.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("Dyadic::parse: exponent out of range in '" + text + "'");
    }
  }
  return Dyadic(mpz_class(head, 10), e);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic Dyadic::mul_pow2(long e) const {
  if (num_ == 0) return Dyadic();
  Dyadic r = *this;
  if (e >= 0) {
    const long used = std::min(e, exp_);
    r.exp_ -= used;
    if (e > used) r.num_ <<= static_cast<unsigned long>(e - used);
  } else {
    // An integer numerator may be even, so restore canonical form.
    r.exp_ += -e;
    r.canonicalize();
  }
  return r;
}

mpz_class Dyadic::floor() const {
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  return q;
}

long Dyadic::floor_long() const {
  const mpz_class f = floor();
  if (!f.fits_slong_p()) throw std::overflow_error("Dyadic::floor_long: out of range");
  return f.get_si();
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const long e = std::max(a.exp_, b.exp_);
  mpz_class n = a.num_ << static_cast<unsigned long>(e - a.exp_);
  n += b.num_ << static_cast<unsigned long>(e - b.exp_);
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  const long e = std::max(exp_, o.exp_);
  const mpz_class lhs = num_ << static_cast<unsigned long>(e - exp_);
  const mpz_class rhs = o.num_ << static_cast<unsigned long>(e - o.exp_);
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

}  // namespace thompson
