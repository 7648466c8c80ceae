#include "eulerian/bigint.hpp"

#include <stdexcept>

namespace eulerian {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt binom(const BigInt& n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && n < k) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

BigInt binom(long n, long k) { return binom(BigInt(n), k); }

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(const BigInt& x, unsigned long k) {
  BigInt out = 1;
  BigInt factor = x;
  for (unsigned long i = 0; i < k; ++i) {
    out *= factor;
    --factor;
  }
  return out;
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace eulerian
