#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eulerian/bigint.hpp"

namespace eulerian {

/// Rows n = 1..N of the mth-order Eulerian numbers T(m; n, k), 0 <= k < n.
///
/// Rows are addressed 1-based by n and entries 0-based by k. Queries outside
/// 0 <= k < n return 0, matching the convention that the numbers vanish
/// there. A built triangle is never mutated.
class EulerianTriangle {
 public:
  EulerianTriangle(unsigned m, std::vector<std::vector<BigInt>> rows);

  unsigned m() const { return m_; }
  unsigned n_max() const { return static_cast<unsigned>(rows_.size()); }

  /// Row n as a view of n entries; throws std::out_of_range outside 1..n_max.
  std::span<const BigInt> row(unsigned n) const;

  /// T(m; n, k), or 0 when k < 0 or k >= n. n must be within 1..n_max.
  BigInt at(unsigned n, long k) const;

  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

  /// Copy with one entry replaced. Only used to build negative controls.
  EulerianTriangle with_entry(unsigned n, unsigned k, BigInt value) const;

  friend bool operator==(const EulerianTriangle&, const EulerianTriangle&) = default;

 private:
  unsigned m_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Builds rows 1..n_max by the three-term recurrence
///   T(n,k) = (k+1) T(n-1,k) + (mn - k - m + 1) T(n-1,k-1),  T(1,0) = 1.
/// Throws std::invalid_argument for m == 0 or n_max == 0.
EulerianTriangle build_triangle(unsigned m, unsigned n_max);

/// Faa di Bruno type sum over weak compositions t_1 + ... + t_{k+1} = n-k-1 of
///   prod_i i^{t_i} * prod_{j=1..k} (m (t_1 + ... + t_j) + j (m-1) + 1).
/// Compositions are visited in colexicographic order. Returns 0 outside
/// 0 <= k < n; throws std::invalid_argument for m == 0 or n == 0.
BigInt value_explicit(unsigned m, unsigned n, long k);

/// Row sum prod_{j=0}^{n-1} (jm + 1).
BigInt row_sum_closed(unsigned m, unsigned n);

/// Last entry T(m; n, n-1) = prod_{j=1}^{n-1} (j(m-1) + 1); 1 for n = 1.
BigInt last_entry_closed(unsigned m, unsigned n);

/// T(m; n, 1) = m (2^n - n - 1), n >= 2.
BigInt k1_closed(unsigned m, unsigned n);

/// Checks that row n of order m-1 sums to the last entry of row n of order m.
/// Throws std::invalid_argument for m < 2 or n == 0.
bool order_lift_check(unsigned m, unsigned n);

}  // namespace eulerian
