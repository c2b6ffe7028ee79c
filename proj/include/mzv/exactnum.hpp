#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace mzv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// P-adic valuation of a rational. Zero carries a distinct infinite marker
// instead of a sentinel integer, so comparisons never confuse the two.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;  // throws DomainError on the infinite marker

  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& o) const;

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

bool is_prime(long n);

Valuation padic_valuation(const Rational& q, long P);

// Membership in Z_(P): the reduced denominator is prime to P.
bool in_Z1P(const Rational& q, long P);

// Binomial coefficient, 0 outside 0 <= k <= n.
Integer binomial(long n, long k);

// base^e for any integer e (base must be nonzero when e < 0).
Rational power(const Rational& base, long e);

// "a/b", or "a" when the denominator is 1. The sign sits on the numerator.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace mzv
