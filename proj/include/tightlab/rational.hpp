#ifndef TIGHTLAB_RATIONAL_HPP
#define TIGHTLAB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tl {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q", "p" or "-p/q". Throws Error(kParse) on anything else and on
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// C(n, r), zero outside 0 <= r <= n.
BigInt binomial(std::int64_t n, std::int64_t r);

/// Generalised binomial C(x, r) = x(x-1)...(x-r+1)/r! for rational x.
Rational binomial(const Rational& x, std::int64_t r);

inline Rational ratio(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

double to_double(const Rational& value);

}  // namespace tl

#endif
