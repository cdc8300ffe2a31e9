#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace birkhoff {

/// Arbitrary-precision signed integer. Thin value wrapper around GMP.
///
/// Serialized form is an optional leading '-' followed by decimal digits,
/// no separators — the only number format used on disk and on the wire.
/// Immutable sharing across threads is safe; distinct values never alias.
class BigInt {
 public:
  BigInt() : v_(0) {}
  BigInt(long v) : v_(v) {}  // NOLINT: implicit by design, mirrors int literals
  explicit BigInt(unsigned long v) : v_(v) {}
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  /// Parses the strict decimal form. Throws ParseError on anything else.
  static BigInt fromString(std::string_view s);

  std::string str() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  bool isZero() const { return sgn(v_) == 0; }
  bool odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  bool fitsUint64() const;
  std::uint64_t toUint64() const;  // throws Error if out of range

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  /// Exact division; the quotient must have no remainder.
  static BigInt divExact(const BigInt& a, const BigInt& b);
  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.v_))); }
  static BigInt factorial(unsigned long n);
  static BigInt pow(const BigInt& base, unsigned long exp);

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// C(a, k) with C(a, k) = 0 for k > a. Exact.
BigInt binomial(unsigned long a, unsigned long k);

/// n! / prod(parts[i]!). The parts must sum to n.
BigInt multinomial(unsigned long n, std::span<const int> parts);

}  // namespace birkhoff
