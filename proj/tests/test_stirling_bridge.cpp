#include <doctest.h>

#include <random>

#include "eulerian/stirling.hpp"
#include "oracles.hpp"

using namespace eulerian;

TEST_CASE("Stirling number examples") {
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling1_unsigned(4, 2) == 11);
  CHECK(stirling1_signed(2, 1) == -1);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(3, 5) == 0);
  CHECK(stirling1_unsigned(-1, 0) == 0);
}

TEST_CASE("Stirling tables agree with independent constructions") {
  for (long n = 0; n <= 20; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(stirling2(n, k) == oracle::stirling2_inclusion_exclusion(n, k));
      CHECK(stirling1_unsigned(n, k) == oracle::cycle_count_by_rising_factorial(n, k));
      const BigInt sign = (n - k) % 2 == 0 ? 1 : -1;
      CHECK(stirling1_signed(n, k) == sign * stirling1_unsigned(n, k));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const auto counts = oracle::cycle_counts_by_enumeration(n);
    for (int k = 0; k <= n; ++k) CHECK(stirling1_unsigned(n, k) == counts[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("StirlingTable grows by appending") {
  StirlingTable t(StirlingKind::second, 3);
  CHECK(t.n_max() == 3);
  const BigInt before = t.at(3, 2);
  t.grow(12);
  CHECK(t.n_max() == 12);
  CHECK(t.at(3, 2) == before);
  CHECK(t.at(12, 12) == 1);
  CHECK_THROWS_AS(t.at(13, 1), std::out_of_range);
  StirlingTable f(StirlingKind::first_unsigned, 6);
  CHECK(f.at(6, 6) == 1);
  CHECK(f.at(6, 0) == 0);
}

TEST_CASE("s2_from_eulerian2 examples") {
  CHECK(s2_from_eulerian2(2, 1) == 1);
  CHECK(s2_from_eulerian2(3, 2) == 15);
  for (long ell = 1; ell <= 10; ++ell) {
    CHECK(s2_from_eulerian2(1, static_cast<unsigned>(ell)) == oracle::binom_by_factorials(ell + 1, 2));
    CHECK(s2_from_eulerian2(1, static_cast<unsigned>(ell)) == stirling2(ell + 1, ell));
  }
  CHECK_THROWS_AS(s2_from_eulerian2(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(s2_from_eulerian2(build_triangle(3, 3), 2, 1), std::invalid_argument);
}

TEST_CASE("s2_from_eulerian2 reproduces S(n+l, l)") {
  for (long n = 1; n <= 6; ++n) {
    for (long ell = 1; ell <= 8; ++ell) {
      CHECK(s2_from_eulerian2(static_cast<unsigned>(n), static_cast<unsigned>(ell)) ==
            oracle::stirling2_inclusion_exclusion(n + ell, ell));
    }
  }
}

TEST_CASE("eulerian2_from_s2 examples and round trip") {
  CHECK(eulerian2_from_s2(2, 0) == 1);
  CHECK(eulerian2_from_s2(3, 1) == 8);
  CHECK(eulerian2_from_s2(4, 2) == 58);
  const auto tri = build_triangle(2, 7);
  for (unsigned n = 1; n <= 7; ++n) {
    for (long k = 0; k < static_cast<long>(n); ++k) CHECK(eulerian2_from_s2(n, k) == tri.at(n, k));
    CHECK(eulerian2_from_s2(n, n) == 0);
  }
  CHECK_THROWS_AS(eulerian2_from_s2(3, -1), std::invalid_argument);
}

TEST_CASE("c1_from_eulerian2 examples") {
  CHECK(c1_from_eulerian2(2, 1) == 1);
  CHECK(c1_from_eulerian2(3, 2) == 2);
  CHECK(c1_from_eulerian2(4, 2) == 11);
  CHECK(c1_from_eulerian2(5, 0) == 1);
  CHECK(-c1_from_eulerian2(2, 1) == stirling1_signed(2, 1));
}

TEST_CASE("c1_from_eulerian2 agrees with cycle counts") {
  for (long n = 2; n <= 10; ++n) {
    for (long k = 1; k < n; ++k) {
      CHECK(c1_from_eulerian2(static_cast<unsigned>(n), static_cast<unsigned>(k)) ==
            oracle::cycle_count_by_rising_factorial(n, n - k));
    }
  }
}

TEST_CASE("eulerian2_from_c1 examples") {
  CHECK(eulerian2_from_c1(2, 3) == 2);
  CHECK(eulerian2_from_c1(3, 5) == 8);
  CHECK(eulerian2_from_c1(4, 6) == 58);
  CHECK_THROWS_AS(eulerian2_from_c1(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(eulerian2_from_c1(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(eulerian2_from_c1(0, 1), std::invalid_argument);
}

TEST_CASE("eulerian2_from_c1 reproduces the second-order triangle") {
  const auto tri = build_triangle(2, 6);
  for (unsigned k = 1; k <= 6; ++k) {
    for (unsigned i = k + 1; i <= 2 * k; ++i) CHECK(eulerian2_from_c1(k, i) == tri.at(k, 2L * k - i));
  }
}

TEST_CASE("phi examples") {
  // phi_{3;2}(x) = C(x,6) + 3 C(x+1,6)
  for (long x = -4; x <= 15; ++x) {
    CHECK(phi(3, 2, BigInt(x)) == binom(x, 6) + 3 * binom(x + 1, 6));
  }
  CHECK(phi(1, 3, BigInt(4)) == 64);
  CHECK(phi(3, 3, BigInt(10)) == binom(10, 9) + 12 * binom(11, 9) + 15 * binom(12, 9));
}

TEST_CASE("Worpitzky identities") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (long x = 0; x <= 30; ++x) CHECK(phi(1, n, BigInt(x)) == pow(BigInt(x), n));
  }
  for (unsigned n = 1; n <= 6; ++n) {
    for (long x = n; x <= 20; ++x) CHECK(phi(2, n, BigInt(x)) == oracle::cycle_count_by_rising_factorial(x, x - n));
  }
}

TEST_CASE("phi_poly evaluates to phi") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(-40, 40);
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      const RatPoly p = phi_poly(m, n);
      CHECK(p.degree() == static_cast<long>(m * n));
      for (int trial = 0; trial < 8; ++trial) {
        const long x = pick(rng);
        CHECK(p.evaluate(Rational(x)) == Rational(phi(m, n, BigInt(x))));
      }
    }
  }
  // first order: x^n exactly
  CHECK(phi_poly(1, 3) == RatPoly{0, 0, 0, 1});
}
