#include "branchnum/simd.hpp"

namespace branchnum::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if BRANCHNUM_HAVE_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_available() noexcept { return available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

void nonzero_xor_bits(Isa isa, const std::uint8_t* data, const std::uint8_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept {
#if BRANCHNUM_HAVE_X86
  if (isa == Isa::Avx2) return avx2::nonzero_xor_bits_u8(data, pattern, period, units, out);
#endif
  scalar::nonzero_xor_bits(data, pattern, period, units, out);
}

void nonzero_xor_bits(Isa isa, const std::uint16_t* data, const std::uint16_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept {
#if BRANCHNUM_HAVE_X86
  if (isa == Isa::Avx2) return avx2::nonzero_xor_bits_u16(data, pattern, period, units, out);
#endif
  scalar::nonzero_xor_bits(data, pattern, period, units, out);
}

void nonzero_xor_bits(Isa isa, const std::uint32_t* data, const std::uint32_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept {
#if BRANCHNUM_HAVE_X86
  if (isa == Isa::Avx2) return avx2::nonzero_xor_bits_u32(data, pattern, period, units, out);
#endif
  scalar::nonzero_xor_bits(data, pattern, period, units, out);
}

}  // namespace branchnum::simd
