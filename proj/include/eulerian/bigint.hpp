#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eulerian {

/// Arbitrary-precision signed integer. Every count in this library is one.
using BigInt = mpz_class;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& v) { return v.get_str(10); }

/// Builds a reduced rational; throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Binomial coefficient C(n, k). Zero for k < 0, or for 0 <= n < k.
/// Negative n uses the falling-factorial extension (n)_k / k!.
BigInt binom(const BigInt& n, long k);
BigInt binom(long n, long k);

BigInt factorial(unsigned long n);

/// Falling factorial (x)_k = x (x-1) ... (x-k+1); (x)_0 = 1.
BigInt falling_factorial(const BigInt& x, unsigned long k);

/// Exact integer power with a nonnegative exponent.
BigInt pow(const BigInt& base, unsigned long exp);

}  // namespace eulerian
