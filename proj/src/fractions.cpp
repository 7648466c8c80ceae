#include "eulerian/fractions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulerian/quadrature.hpp"
#include "eulerian/simd/kernels.hpp"

namespace eulerian {

namespace {

const Poly kT{BigInt(0), BigInt(1)};

BigInt sign_power(long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace

EulerianPolynomial eulerian_poly(const EulerianTriangle& tri, unsigned n) {
  auto row = tri.row(n);
  return {tri.m(), n, Poly(std::vector<BigInt>(row.begin(), row.end()))};
}

EulerianPolynomial eulerian_poly(unsigned m, unsigned n) { return eulerian_poly(build_triangle(m, n), n); }

EulerianPolynomial poly_recurrence_step(const EulerianPolynomial& s) {
  const Poly lead{BigInt(1), BigInt(static_cast<unsigned long>(s.m) * s.n)};
  const Poly t_one_minus_t{BigInt(0), BigInt(1), BigInt(-1)};
  return {s.m, s.n + 1, lead * s.poly + t_one_minus_t * s.poly.derivative()};
}

BinomRat fraction(const EulerianPolynomial& s) {
  return BinomRat(s.poly, static_cast<unsigned long>(s.m) * (s.n - 1) + 2);
}

BinomRat fraction(unsigned m, unsigned n) { return fraction(eulerian_poly(m, n)); }

BinomRat fraction_hat(const EulerianPolynomial& s) {
  return BinomRat(kT * s.poly, static_cast<unsigned long>(s.m) * s.n + 1);
}

BinomRat fraction_hat(unsigned m, unsigned n) { return fraction_hat(eulerian_poly(m, n)); }

bool IdentityReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

IdentityReport verify_identities(const EulerianTriangle& tri, unsigned n) {
  const unsigned m = tri.m();
  const auto s_n = eulerian_poly(tri, n);
  const auto s_next = eulerian_poly(tri, n + 1);
  const BinomRat f_n = fraction(s_n);
  const BinomRat f_next = fraction(s_next);
  const BinomRat hat_n = fraction_hat(s_n);
  const BinomRat hat_next = fraction_hat(s_next);

  // t (1-t)^{-(m-1)} F_n
  const BinomRat lifted = (kT * f_n).times_one_minus_t(-static_cast<long>(m - 1));

  IdentityReport report{m, n, {}};
  report.results.push_back({"F^ = t(1-t)^-(m-1) F", hat_n == lifted});
  report.results.push_back({"d/dt[t(1-t)^-(m-1) F_n] = F_{n+1}", lifted.derivative() == f_next});
  report.results.push_back(
      {"t d/dt F^_n = (1-t)^(m-1) F^_{n+1}", kT * hat_n.derivative() == hat_next.times_one_minus_t(static_cast<long>(m - 1))});
  return report;
}

IdentityReport verify_identities(unsigned m, unsigned n) { return verify_identities(build_triangle(m, n + 1), n); }

SeriesCoeffs series_coeffs(const EulerianTriangle& tri, unsigned n, std::size_t terms) {
  const long width = static_cast<long>(tri.m()) * n;
  SeriesCoeffs out{tri.m(), n, std::vector<BigInt>(terms, BigInt(0))};
  for (std::size_t ell = 1; ell < terms; ++ell) {
    BigInt sum = 0;
    for (long k = 0; k < static_cast<long>(ell); ++k) {
      sum += tri.at(n, k) * binom(width + static_cast<long>(ell) - k - 1, width);
    }
    out.coeffs[ell] = std::move(sum);
  }
  return out;
}

SeriesCoeffs series_coeffs(unsigned m, unsigned n, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("series needs at least one term");
  return series_coeffs(build_triangle(m, n), n, terms);
}

SeriesCoeffs series_coeffs_by_expansion(unsigned m, unsigned n, std::size_t terms) {
  return {m, n, fraction_hat(m, n).series(terms)};
}

std::vector<BigInt> eulerian_from_series(const SeriesCoeffs& f) {
  if (f.coeffs.size() < static_cast<std::size_t>(f.n) + 1) {
    throw std::invalid_argument("inversion of row " + std::to_string(f.n) + " needs " + std::to_string(f.n + 1) +
                                " series coefficients, got " + std::to_string(f.coeffs.size()));
  }
  const long top = static_cast<long>(f.m) * f.n + 1;
  std::vector<BigInt> row(f.n);
  for (long k = 0; k < static_cast<long>(f.n); ++k) {
    BigInt sum = 0;
    for (long ell = 1; ell <= k + 1; ++ell) {
      sum += sign_power(k - ell + 1) * binom(top, k - ell + 1) * f.coeffs[static_cast<std::size_t>(ell)];
    }
    row[static_cast<std::size_t>(k)] = std::move(sum);
  }
  return row;
}

IntegralReport integral_check(unsigned m, unsigned n, long a, long b, double tol) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  if (static_cast<long>(n) + a + b < 0) throw std::invalid_argument("n + a + b must be nonnegative");
  const long mn = static_cast<long>(m) * n;
  const long denom_pow = static_cast<long>(m) * (static_cast<long>(n) - 1) + 2;
  if (b - (static_cast<long>(n) - 1) + mn < 0 || b + denom_pow - (static_cast<long>(n) - 1) < 0) {
    throw std::invalid_argument("transformed integrand is unbounded for these parameters");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const auto tri = build_triangle(m, n);
  IntegralReport rep;
  rep.m = m;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.tol = tol;

  Rational rhs = 0;
  Rational lhs = 0;
  for (long k = 0; k < static_cast<long>(n); ++k) {
    const BigInt signed_t = sign_power(k) * tri.at(n, k);
    rhs += make_rational(signed_t, binom(mn + a + b, a + k));
    lhs += make_rational(signed_t * factorial(static_cast<unsigned long>(a + k)) *
                             factorial(static_cast<unsigned long>(b + denom_pow - k)),
                         factorial(static_cast<unsigned long>(a + b + denom_pow + 1)));
  }
  rep.rhs_exact = make_rational(sign_power(a), mn + a + b + 1) * rhs;
  rep.lhs_exact = Rational(sign_power(a)) * lhs;

  std::vector<double> s_coeffs;
  for (const auto& v : tri.row(n)) s_coeffs.push_back(v.get_d());

  // x = t/(t-1), dx = -(1-t)^{-2} dt, and the orientation flip absorbs the sign.
  auto make_integrand = [&](bool hat) -> BatchIntegrand {
    return [&, hat](std::span<const double> t, std::span<double> out) {
      std::vector<double> x(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) x[i] = t[i] / (t[i] - 1.0);
      std::vector<double> s(t.size());
      simd::horner_batch(s_coeffs, x, s);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double jac = 1.0 / ((1.0 - t[i]) * (1.0 - t[i]));
        const double one_minus_x = 1.0 - x[i];
        double g;
        if (!hat) {
          const double f = s[i] / std::pow(one_minus_x, static_cast<double>(denom_pow));
          g = std::pow(x[i], static_cast<double>(a)) * std::pow(one_minus_x, static_cast<double>(-a - b - 2)) * f;
        } else {
          const double f_hat = x[i] * s[i] / std::pow(one_minus_x, static_cast<double>(mn + 1));
          g = std::pow(x[i], static_cast<double>(a - 1)) * std::pow(one_minus_x, static_cast<double>(static_cast<long>(m) - a - b - 3)) *
              f_hat;
        }
        out[i] = g * jac;
      }
    };
  };

  const double rhs_d = rep.rhs_exact.get_d();
  const double scale = std::max(1.0, std::abs(rhs_d));
  const double abs_tol = tol * scale / 10.0;
  const auto plain = integrate_adaptive(make_integrand(false), 0.0, 1.0, abs_tol);
  const auto hatted = integrate_adaptive(make_integrand(true), 0.0, 1.0, abs_tol);
  rep.lhs_numeric = plain.value;
  rep.lhs_hat_numeric = hatted.value;
  rep.intervals = plain.intervals + hatted.intervals;
  rep.residual = std::abs(plain.value - rhs_d) / scale;
  rep.residual_hat = std::abs(hatted.value - rhs_d) / scale;
  rep.passed = rep.residual <= tol && rep.residual_hat <= tol;
  return rep;
}

}  // namespace eulerian
