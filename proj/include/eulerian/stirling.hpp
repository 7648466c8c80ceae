#pragma once

#include <mutex>
#include <vector>

#include "eulerian/bigint.hpp"
#include "eulerian/poly.hpp"
#include "eulerian/triangle.hpp"

namespace eulerian {

enum class StirlingKind { second, first_signed, first_unsigned };

/// Triangular table of Stirling numbers, rows n = 0..n_max, entries k = 0..n.
///
/// grow() only appends rows, so entries handed out earlier stay valid in
/// value. The table itself is not synchronized; the free functions below
/// share one mutex-guarded table per kind.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind, unsigned n_max = 0);

  StirlingKind kind() const { return kind_; }
  unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

  void grow(unsigned n_max);

  /// Entry (n, k); 0 outside 0 <= k <= n. n must be within the table.
  BigInt at(long n, long k) const;

 private:
  StirlingKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

/// S(n, k), set partitions of an n-set into k blocks.
BigInt stirling2(long n, long k);
/// [n; k], permutations of n with k cycles.
BigInt stirling1_unsigned(long n, long k);
/// s(n, k) = (-1)^{n-k} [n; k].
BigInt stirling1_signed(long n, long k);

/// S(n + l, l) = sum_{k=0}^{l-1} T(2; n, k) C(2n + l - k - 1, 2n).
/// Requires n >= 1, l >= 1.
BigInt s2_from_eulerian2(unsigned n, unsigned ell);
BigInt s2_from_eulerian2(const EulerianTriangle& second_order, unsigned n, unsigned ell);

/// T(2; n, k) = sum_{l=1}^{k+1} (-1)^{k-l+1} C(2n+1, k-l+1) S(n+l, l).
/// Requires n >= 1, k >= 0; returns 0 for k >= n.
BigInt eulerian2_from_s2(unsigned n, long k);

/// [n; n-k] = sum_{i=k+1}^{n} T(2; k, 2k-i) C(2k+n-i, 2k); 1 when k == 0.
/// Requires n >= 1, k >= 0.
BigInt c1_from_eulerian2(unsigned n, unsigned k);
BigInt c1_from_eulerian2(const EulerianTriangle& second_order, unsigned n, unsigned k);

/// T(2; k, 2k-i) = sum_{n=0}^{i} (-1)^{i-n} [n; n-k] C(2k+1, i-n).
/// Requires k >= 1 and k+1 <= i <= 2k.
BigInt eulerian2_from_c1(unsigned k, unsigned i);

/// phi_{m;n}(x) = sum_{k=0}^{n-1} T(m; n, k) C(x + k, mn) at an integer x.
/// Negative arguments of C use the falling-factorial extension.
BigInt phi(unsigned m, unsigned n, const BigInt& x);
BigInt phi(const EulerianTriangle& tri, unsigned n, const BigInt& x);

/// The same function as a degree-mn polynomial in x with rational coefficients,
/// using C(x + k, mn) = (x + k)_{mn} / (mn)!.
RatPoly phi_poly(unsigned m, unsigned n);

}  // namespace eulerian
