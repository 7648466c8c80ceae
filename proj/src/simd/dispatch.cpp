#include "eulerian/simd/kernels.hpp"

namespace eulerian::simd {

namespace {

struct Table {
  Isa isa;
  unsigned (*count_descents)(std::span<const std::uint8_t>);
  void (*horner_batch)(std::span<const double>, std::span<const double>, std::span<double>);
};

Table select() {
#if EULERIAN_SIMD_X86
  if (avx2_available()) return {Isa::avx2, &avx2::count_descents, &avx2::horner_batch};
#endif
  return {Isa::scalar, &scalar::count_descents, &scalar::horner_batch};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

bool avx2_available() {
#if EULERIAN_SIMD_X86 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return table().isa; }

unsigned count_descents(std::span<const std::uint8_t> word) { return table().count_descents(word); }

void horner_batch(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  table().horner_batch(coeffs, xs, out);
}

}  // namespace eulerian::simd
