#include "eulerian/stirling.hpp"

#include <stdexcept>

namespace eulerian {

StirlingTable::StirlingTable(StirlingKind kind, unsigned n_max) : kind_(kind) {
  rows_.push_back({BigInt(1)});
  grow(n_max);
}

void StirlingTable::grow(unsigned n_max) {
  while (rows_.size() <= n_max) {
    const auto n = static_cast<long>(rows_.size());
    const auto& prev = rows_.back();
    std::vector<BigInt> cur(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long k = 1; k <= n; ++k) {
      BigInt keep = k < n ? prev[static_cast<std::size_t>(k)] : BigInt(0);
      const BigInt& shift = prev[static_cast<std::size_t>(k - 1)];
      switch (kind_) {
        case StirlingKind::second:
          cur[static_cast<std::size_t>(k)] = BigInt(k) * keep + shift;
          break;
        case StirlingKind::first_unsigned:
          cur[static_cast<std::size_t>(k)] = BigInt(n - 1) * keep + shift;
          break;
        case StirlingKind::first_signed:
          cur[static_cast<std::size_t>(k)] = shift - BigInt(n - 1) * keep;
          break;
      }
    }
    rows_.push_back(std::move(cur));
  }
}

BigInt StirlingTable::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  if (static_cast<std::size_t>(n) >= rows_.size()) throw std::out_of_range("Stirling table not grown to row " + std::to_string(n));
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

BigInt cached(StirlingKind kind, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex mutex;
  static StirlingTable second(StirlingKind::second);
  static StirlingTable first_signed(StirlingKind::first_signed);
  static StirlingTable first_unsigned(StirlingKind::first_unsigned);
  std::lock_guard lock(mutex);
  StirlingTable& table = kind == StirlingKind::second           ? second
                         : kind == StirlingKind::first_signed ? first_signed
                                                              : first_unsigned;
  table.grow(static_cast<unsigned>(n));
  return table.at(n, k);
}

BigInt sign_power(long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

void require_order(const EulerianTriangle& tri, unsigned m) {
  if (tri.m() != m) throw std::invalid_argument("expected a triangle of order " + std::to_string(m));
}

}  // namespace

BigInt stirling2(long n, long k) { return cached(StirlingKind::second, n, k); }
BigInt stirling1_unsigned(long n, long k) { return cached(StirlingKind::first_unsigned, n, k); }
BigInt stirling1_signed(long n, long k) { return cached(StirlingKind::first_signed, n, k); }

BigInt s2_from_eulerian2(const EulerianTriangle& second_order, unsigned n, unsigned ell) {
  require_order(second_order, 2);
  if (n == 0 || ell == 0) throw std::invalid_argument("s2_from_eulerian2 needs n >= 1 and l >= 1");
  BigInt sum = 0;
  for (long k = 0; k < static_cast<long>(ell); ++k) {
    sum += second_order.at(n, k) * binom(2L * n + ell - k - 1, 2L * n);
  }
  return sum;
}

BigInt s2_from_eulerian2(unsigned n, unsigned ell) {
  if (n == 0) throw std::invalid_argument("s2_from_eulerian2 needs n >= 1");
  return s2_from_eulerian2(build_triangle(2, n), n, ell);
}

BigInt eulerian2_from_s2(unsigned n, long k) {
  if (n == 0 || k < 0) throw std::invalid_argument("eulerian2_from_s2 needs n >= 1 and k >= 0");
  BigInt sum = 0;
  for (long ell = 1; ell <= k + 1; ++ell) {
    sum += sign_power(k - ell + 1) * binom(2L * n + 1, k - ell + 1) * stirling2(n + ell, ell);
  }
  return sum;
}

BigInt c1_from_eulerian2(const EulerianTriangle& second_order, unsigned n, unsigned k) {
  require_order(second_order, 2);
  if (n == 0) throw std::invalid_argument("c1_from_eulerian2 needs n >= 1");
  if (k == 0) return 1;
  BigInt sum = 0;
  for (long i = static_cast<long>(k) + 1; i <= static_cast<long>(n); ++i) {
    sum += second_order.at(k, 2L * k - i) * binom(2L * k + n - i, 2L * k);
  }
  return sum;
}

BigInt c1_from_eulerian2(unsigned n, unsigned k) {
  if (n == 0) throw std::invalid_argument("c1_from_eulerian2 needs n >= 1");
  if (k == 0) return 1;
  return c1_from_eulerian2(build_triangle(2, k), n, k);
}

BigInt eulerian2_from_c1(unsigned k, unsigned i) {
  if (k == 0 || i < k + 1 || i > 2 * k) throw std::invalid_argument("eulerian2_from_c1 needs k >= 1 and k+1 <= i <= 2k");
  BigInt sum = 0;
  for (long n = 0; n <= static_cast<long>(i); ++n) {
    sum += sign_power(static_cast<long>(i) - n) * stirling1_unsigned(n, n - static_cast<long>(k)) *
           binom(2L * k + 1, static_cast<long>(i) - n);
  }
  return sum;
}

BigInt phi(const EulerianTriangle& tri, unsigned n, const BigInt& x) {
  const long width = static_cast<long>(tri.m()) * n;
  BigInt sum = 0;
  for (long k = 0; k < static_cast<long>(n); ++k) sum += tri.at(n, k) * binom(x + k, width);
  return sum;
}

BigInt phi(unsigned m, unsigned n, const BigInt& x) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  return phi(build_triangle(m, n), n, x);
}

RatPoly phi_poly(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  const auto tri = build_triangle(m, n);
  const unsigned long width = static_cast<unsigned long>(m) * n;
  Poly numer;
  for (unsigned k = 0; k < n; ++k) {
    // (x + k)_{width} = prod_{i=0}^{width-1} (x + k - i)
    Poly falling = Poly::constant(1);
    for (unsigned long i = 0; i < width; ++i) falling = falling * Poly{BigInt(static_cast<long>(k) - static_cast<long>(i)), BigInt(1)};
    numer = numer + tri.at(n, k) * falling;
  }
  const Rational scale = make_rational(1, factorial(width));
  return scale * to_rat_poly(numer);
}

}  // namespace eulerian
