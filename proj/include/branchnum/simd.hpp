#pragma once

// Data-parallel inner kernel of the branch engine.
//
// The engine lays out candidate output vectors contiguously, each padded to a
// power-of-two stride, and needs to know which coordinates of
//   prefix + candidate
// are non-zero. In characteristic 2 the sum is XOR, so the whole batch is one
// periodic XOR followed by a compare-with-zero. The kernel emits the result
// as a packed bitstream: bit e is set iff (data[e] ^ pattern[e % period]) != 0.
//
// Every ISA variant produces bit-identical output; the scalar one is the
// reference the others are tested against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace branchnum::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;
bool available(Isa isa) noexcept;
/// Best ISA supported by the running CPU.
Isa best_available() noexcept;

/// Elements consumed per output word.
inline constexpr std::size_t kUnit = 32;

/// `data` holds `units * kUnit` elements, `pattern` holds `period` elements
/// (period is 32 or 64), `out` receives `units` words.
void nonzero_xor_bits(Isa isa, const std::uint8_t* data, const std::uint8_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept;
void nonzero_xor_bits(Isa isa, const std::uint16_t* data, const std::uint16_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept;
void nonzero_xor_bits(Isa isa, const std::uint32_t* data, const std::uint32_t* pattern,
                      std::size_t period, std::size_t units, std::uint32_t* out) noexcept;

namespace scalar {
template <typename Lane>
void nonzero_xor_bits(const Lane* data, const Lane* pattern, std::size_t period,
                      std::size_t units, std::uint32_t* out) noexcept {
  for (std::size_t u = 0; u < units; ++u) {
    const Lane* block = data + u * kUnit;
    const Lane* pat = pattern + (u * kUnit) % period;
    std::uint32_t word = 0;
    for (std::size_t i = 0; i < kUnit; ++i) {
      word |= static_cast<std::uint32_t>((block[i] ^ pat[i]) != 0) << i;
    }
    out[u] = word;
  }
}
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BRANCHNUM_HAVE_X86 1
namespace avx2 {
void nonzero_xor_bits_u8(const std::uint8_t* data, const std::uint8_t* pattern, std::size_t period,
                         std::size_t units, std::uint32_t* out) noexcept;
void nonzero_xor_bits_u16(const std::uint16_t* data, const std::uint16_t* pattern,
                          std::size_t period, std::size_t units, std::uint32_t* out) noexcept;
void nonzero_xor_bits_u32(const std::uint32_t* data, const std::uint32_t* pattern,
                          std::size_t period, std::size_t units, std::uint32_t* out) noexcept;
}  // namespace avx2
#else
#define BRANCHNUM_HAVE_X86 0
#endif

}  // namespace branchnum::simd
