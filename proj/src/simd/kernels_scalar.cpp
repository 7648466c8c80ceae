#include <cmath>

#include "eulerian/simd/kernels.hpp"

namespace eulerian::simd::scalar {

unsigned count_descents(std::span<const std::uint8_t> word) {
  unsigned count = 0;
  for (std::size_t j = 0; j + 1 < word.size(); ++j) count += word[j] > word[j + 1] ? 1U : 0U;
  return count;
}

void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = std::fma(acc, xs[i], coeffs[k]);
    out[i] = acc;
  }
}

}  // namespace eulerian::simd::scalar
