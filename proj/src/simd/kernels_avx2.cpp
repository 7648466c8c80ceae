// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "eulerian/simd/kernels.hpp"

namespace eulerian::simd::avx2 {

unsigned count_descents(std::span<const std::uint8_t> word) {
  const std::size_t len = word.size();
  const std::uint8_t* p = word.data();
  const __m256i bias = _mm256_set1_epi8(static_cast<char>(0x80));
  unsigned count = 0;
  std::size_t j = 0;
  // 32 adjacent pairs (j, j+1) per step; bias flips to a signed compare of unsigned bytes.
  for (; j + 32 < len; j += 32) {
    __m256i lhs = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j)), bias);
    __m256i rhs = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j + 1)), bias);
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(lhs, rhs)));
    count += static_cast<unsigned>(std::popcount(mask));
  }
  for (; j + 1 < len; ++j) count += p[j] > p[j + 1] ? 1U : 0U;
  return count;
}

void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(coeffs[k]));
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = std::fma(acc, xs[i], coeffs[k]);
    out[i] = acc;
  }
}

}  // namespace eulerian::simd::avx2
