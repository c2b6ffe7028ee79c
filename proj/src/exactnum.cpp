#include "mzv/exactnum.hpp"

#include "mzv/errors.hpp"

#include <gmp.h>

#include <string>

namespace mzv {

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation of zero has no finite value");
  return value_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& o) const {
  if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
  return value_ <=> o.value_;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long strip(Integer v, long P) {
  long count = 0;
  while (v != 0 && v % P == 0) {
    v /= P;
    ++count;
  }
  return count;
}

}  // namespace

Valuation padic_valuation(const Rational& q, long P) {
  if (!is_prime(P)) throw DomainError("padic_valuation: " + std::to_string(P) + " is not prime");
  if (q == 0) return Valuation::infinite();
  Integer num = boost::multiprecision::numerator(q);
  if (num < 0) num = -num;
  return Valuation::finite(strip(num, P) - strip(boost::multiprecision::denominator(q), P));
}

bool in_Z1P(const Rational& q, long P) {
  return boost::multiprecision::denominator(q) % P != 0;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational power(const Rational& base, long e) {
  Rational out = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
  return out;
}

std::string to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1) out += "/" + boost::multiprecision::denominator(q).str();
  return out;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw DomainError("malformed rational '" + std::string(text) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace mzv
