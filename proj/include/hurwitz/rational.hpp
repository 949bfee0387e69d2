#pragma once

#include <gmpxx.h>

#include <string>

namespace hurwitz {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. There is no floating point anywhere in this library.
using Rational = mpq_class;

BigInt factorial(long n);

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt int_pow(const BigInt& base, long exponent);

// base^exponent for integer base > 0 and possibly negative exponent.
Rational rational_pow(long base, long exponent);

// Canonicalized num/den, throws std::invalid_argument on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);

// "4", "-3/7". Inverse of parse_rational.
std::string to_string(const Rational& q);

// Accepts "num" or "num/den"; rejects anything GMP cannot parse and zero
// denominators. Result is canonical.
Rational parse_rational(const std::string& text);

}  // namespace hurwitz
