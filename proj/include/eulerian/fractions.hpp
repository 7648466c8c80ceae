#pragma once

#include <string>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/binom_rat.hpp"
#include "eulerian/poly.hpp"
#include "eulerian/triangle.hpp"

namespace eulerian {

/// S_{m;n}(t) = sum_k T(m; n, k) t^k.
struct EulerianPolynomial {
  unsigned m = 1;
  unsigned n = 1;
  Poly poly;

  friend bool operator==(const EulerianPolynomial&, const EulerianPolynomial&) = default;
};

/// Taylor coefficients f_{m;n}(l), l = 0, 1, ..., of the alternative fraction.
struct SeriesCoeffs {
  unsigned m = 1;
  unsigned n = 1;
  std::vector<BigInt> coeffs;
};

EulerianPolynomial eulerian_poly(unsigned m, unsigned n);
EulerianPolynomial eulerian_poly(const EulerianTriangle& tri, unsigned n);

/// S_{m;n+1} = (1 + mn t) S_{m;n} + t (1 - t) S'_{m;n}.
EulerianPolynomial poly_recurrence_step(const EulerianPolynomial& s);

/// F_{m;n} = S_{m;n} / (1 - t)^{m(n-1)+2}
BinomRat fraction(const EulerianPolynomial& s);
BinomRat fraction(unsigned m, unsigned n);

/// F^_{m;n} = t S_{m;n} / (1 - t)^{mn+1}
BinomRat fraction_hat(const EulerianPolynomial& s);
BinomRat fraction_hat(unsigned m, unsigned n);

struct IdentityResult {
  std::string name;
  bool passed = false;
};

struct IdentityReport {
  unsigned m = 1;
  unsigned n = 1;
  std::vector<IdentityResult> results;

  bool all_passed() const;
};

/// Checks, as exact fraction equalities,
///   F^_n = t (1-t)^{-(m-1)} F_n,
///   d/dt [t (1-t)^{-(m-1)} F_n] = F_{n+1},
///   t d/dt F^_n = (1-t)^{m-1} F^_{n+1}.
IdentityReport verify_identities(unsigned m, unsigned n);
/// Same, reading S_{m;n} and S_{m;n+1} from rows n and n+1 of `tri`.
IdentityReport verify_identities(const EulerianTriangle& tri, unsigned n);

/// f_{m;n}(l) = sum_{k=0}^{l-1} T(m; n, k) C(mn + l - k - 1, mn) for l < terms.
SeriesCoeffs series_coeffs(unsigned m, unsigned n, std::size_t terms);
SeriesCoeffs series_coeffs(const EulerianTriangle& tri, unsigned n, std::size_t terms);

/// Same coefficients by direct expansion of F^_{m;n}.
SeriesCoeffs series_coeffs_by_expansion(unsigned m, unsigned n, std::size_t terms);

/// Row n recovered from the series:
///   T(m; n, k) = sum_{l=1}^{k+1} (-1)^{k-l+1} C(mn+1, k-l+1) f_{m;n}(l).
/// Needs at least n + 1 coefficients; throws std::invalid_argument otherwise.
std::vector<BigInt> eulerian_from_series(const SeriesCoeffs& f);

struct IntegralReport {
  unsigned m = 1;
  unsigned n = 1;
  long a = 0;
  long b = 0;
  double tol = 1e-9;
  /// (-1)^a / (mn+a+b+1) sum_k (-1)^k T(m; n, k) / C(mn+a+b, a+k); both
  /// printed identities share this right side.
  Rational rhs_exact;
  /// Quadrature of int_{-inf}^0 x^a (1-x)^{-a-b-2} F_{m;n}(x) dx.
  double lhs_numeric = 0.0;
  /// Quadrature of int_{-inf}^0 x^{a-1} (1-x)^{m-a-b-3} F^_{m;n}(x) dx.
  double lhs_hat_numeric = 0.0;
  /// Closed-form value of the left side by Beta integrals with F's actual
  /// denominator exponent m(n-1)+2.
  Rational lhs_exact;
  double residual = 0.0;
  double residual_hat = 0.0;
  unsigned intervals = 0;
  bool passed = false;
};

/// Integrates both left sides after x = t/(t-1), which maps [0, 1) onto
/// (-inf, 0], and compares with the exact right side at relative tolerance
/// tol * max(1, |rhs|). Requires m, n >= 1, a >= 0, n + a + b >= 0 and a
/// bounded transformed integrand; throws std::invalid_argument otherwise.
IntegralReport integral_check(unsigned m, unsigned n, long a, long b, double tol = 1e-9);

}  // namespace eulerian
