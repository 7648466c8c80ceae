#pragma once

// Data-parallel inner loops with a scalar reference and vectorized variants.
//
// The free functions in `eulerian::simd` dispatch once, at first use, to the
// best variant the running CPU supports. Every variant produces bit-identical
// results to the scalar reference (Horner uses fused multiply-add in both).

#include <cstdint>
#include <span>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define EULERIAN_SIMD_X86 1
#else
#define EULERIAN_SIMD_X86 0
#endif

namespace eulerian::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Variant selected by the dispatcher for this process.
Isa active_isa();

bool avx2_available();

/// Number of positions j with word[j] > word[j + 1].
unsigned count_descents(std::span<const std::uint8_t> word);

/// out[i] = sum_k coeffs[k] * xs[i]^k, evaluated by Horner's rule with fma.
/// `out` must be at least as long as `xs`.
void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);

namespace scalar {
unsigned count_descents(std::span<const std::uint8_t> word);
void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
}  // namespace scalar

#if EULERIAN_SIMD_X86
namespace avx2 {
unsigned count_descents(std::span<const std::uint8_t> word);
void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace eulerian::simd
