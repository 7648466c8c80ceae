#include "eulerian/triangle.hpp"

#include <stdexcept>
#include <string>

namespace eulerian {

EulerianTriangle::EulerianTriangle(unsigned m, std::vector<std::vector<BigInt>> rows)
    : m_(m), rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1) throw std::invalid_argument("triangle row " + std::to_string(i + 1) + " has wrong length");
  }
}

std::span<const BigInt> EulerianTriangle::row(unsigned n) const {
  if (n == 0 || n > rows_.size()) throw std::out_of_range("triangle row " + std::to_string(n) + " not built");
  return rows_[n - 1];
}

BigInt EulerianTriangle::at(unsigned n, long k) const {
  auto r = row(n);
  if (k < 0 || k >= static_cast<long>(n)) return 0;
  return r[static_cast<std::size_t>(k)];
}

EulerianTriangle EulerianTriangle::with_entry(unsigned n, unsigned k, BigInt value) const {
  auto rows = rows_;
  if (n == 0 || n > rows.size() || k >= n) throw std::out_of_range("entry outside triangle");
  rows[n - 1][k] = std::move(value);
  return EulerianTriangle(m_, std::move(rows));
}

EulerianTriangle build_triangle(unsigned m, unsigned n_max) {
  if (m == 0) throw std::invalid_argument("order m must be positive");
  if (n_max == 0) throw std::invalid_argument("row count must be positive");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(n_max);
  rows.push_back({BigInt(1)});
  for (unsigned n = 2; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> cur(n);
    for (unsigned k = 0; k < n; ++k) {
      BigInt v = 0;
      if (k < n - 1) v += BigInt(k + 1) * prev[k];
      if (k >= 1) {
        long weight = static_cast<long>(m) * n - k - m + 1;
        v += BigInt(weight) * prev[k - 1];
      }
      cur[k] = std::move(v);
    }
    rows.push_back(std::move(cur));
  }
  return EulerianTriangle(m, std::move(rows));
}

BigInt value_explicit(unsigned m, unsigned n, long k) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (k < 0 || k >= static_cast<long>(n)) return 0;
  const auto parts = static_cast<std::size_t>(k) + 1;
  const unsigned total = n - static_cast<unsigned>(k) - 1;

  // Odometer over weak compositions of `total` into `parts` parts in colex
  // order, from (total, 0, ..., 0) to (0, ..., 0, total).
  std::vector<unsigned> t(parts, 0);
  t[0] = total;

  BigInt sum = 0;
  const BigInt mm = m;
  while (true) {
    BigInt term = 1;
    for (std::size_t i = 1; i < parts; ++i) term *= pow(BigInt(static_cast<unsigned long>(i + 1)), t[i]);
    unsigned prefix = 0;
    for (std::size_t j = 1; j < parts; ++j) {
      prefix += t[j - 1];
      term *= mm * prefix + BigInt(static_cast<unsigned long>(j)) * (mm - 1) + 1;
    }
    sum += term;

    std::size_t i = 0;
    while (i + 1 < parts && t[i] == 0) ++i;
    if (i + 1 == parts) break;
    const unsigned carried = t[i];
    t[i] = 0;
    t[i + 1] += 1;
    t[0] = carried - 1;
  }
  return sum;
}

BigInt row_sum_closed(unsigned m, unsigned n) {
  BigInt out = 1;
  for (unsigned j = 0; j < n; ++j) out *= BigInt(static_cast<unsigned long>(j) * m + 1);
  return out;
}

BigInt last_entry_closed(unsigned m, unsigned n) {
  BigInt out = 1;
  for (unsigned j = 1; j < n; ++j) out *= BigInt(static_cast<unsigned long>(j) * (m - 1) + 1);
  return out;
}

BigInt k1_closed(unsigned m, unsigned n) {
  return BigInt(m) * (pow(BigInt(2), n) - n - 1);
}

bool order_lift_check(unsigned m, unsigned n) {
  if (m < 2) throw std::invalid_argument("order lift needs m >= 2");
  if (n == 0) throw std::invalid_argument("n must be positive");
  const auto lower = build_triangle(m - 1, n);
  BigInt lower_sum = 0;
  for (const auto& v : lower.row(n)) lower_sum += v;
  return lower_sum == build_triangle(m, n).at(n, static_cast<long>(n) - 1);
}

}  // namespace eulerian
