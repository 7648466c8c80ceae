#pragma once

#include <string>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/poly.hpp"

namespace eulerian {

/// Rational function num(t) / (1 - t)^pow.
///
/// Every Eulerian fraction has this shape, and the family is closed under
/// differentiation, multiplication and multiplication by powers of (1 - t).
/// Construction always canonicalizes: while pow > 0 and num(1) == 0 the
/// common factor (1 - t) is cancelled, and the zero function has pow 0.
class BinomRat {
 public:
  BinomRat() = default;
  BinomRat(Poly num, unsigned long pow);

  static BinomRat polynomial(Poly num) { return BinomRat(std::move(num), 0); }

  const Poly& num() const { return num_; }
  unsigned long pow() const { return pow_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Re-runs canonicalization; idempotent on every constructed value.
  BinomRat canonical() const { return BinomRat(num_, pow_); }

  BinomRat derivative() const;

  /// First `terms` Taylor coefficients at t = 0.
  std::vector<BigInt> series(std::size_t terms) const;

  /// Multiplies by (1 - t)^exponent; exponent may be negative.
  BinomRat times_one_minus_t(long exponent) const;

  friend BinomRat operator+(const BinomRat& a, const BinomRat& b);
  friend BinomRat operator*(const BinomRat& a, const BinomRat& b);
  friend BinomRat operator*(const Poly& p, const BinomRat& r);

  /// Decided by cross-multiplication, so it also holds for values that were
  /// canonicalized along different paths.
  friend bool operator==(const BinomRat& a, const BinomRat& b);

  std::string to_string() const;

 private:
  Poly num_;
  unsigned long pow_ = 0;
};

}  // namespace eulerian
