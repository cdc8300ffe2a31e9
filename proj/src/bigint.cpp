#include "birkhoff/bigint.hpp"

#include <ostream>

#include "birkhoff/errors.hpp"

namespace birkhoff {

BigInt BigInt::fromString(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer literal: '" + std::string(s) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("bad integer literal: '" + std::string(s) + "'");
    }
  }
  return BigInt(mpz_class(std::string(s), 10));
}

bool BigInt::fitsUint64() const {
  static_assert(sizeof(unsigned long) == 8, "64-bit platform expected");
  return sgn(v_) >= 0 && mpz_fits_ulong_p(v_.get_mpz_t()) != 0;
}

std::uint64_t BigInt::toUint64() const {
  if (!fitsUint64()) throw Error("integer out of uint64 range: " + str());
  return mpz_get_ui(v_.get_mpz_t());
}

BigInt BigInt::divExact(const BigInt& a, const BigInt& b) {
  if (b.isZero()) throw DivisionByZeroError("divExact by zero");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(g));
}

BigInt BigInt::factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigInt(std::move(r));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

BigInt binomial(unsigned long a, unsigned long k) {
  if (k > a) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, k);
  return BigInt(std::move(r));
}

BigInt multinomial(unsigned long n, std::span<const int> parts) {
  BigInt r = BigInt::factorial(n);
  unsigned long total = 0;
  for (int p : parts) {
    if (p < 0) throw Error("negative multinomial part");
    total += static_cast<unsigned long>(p);
    r = BigInt::divExact(r, BigInt::factorial(static_cast<unsigned long>(p)));
  }
  if (total != n) throw Error("multinomial parts do not sum to n");
  return r;
}

}  // namespace birkhoff
