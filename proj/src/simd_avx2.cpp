// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "branchnum/simd.hpp"

namespace branchnum::simd::avx2 {

namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }

}  // namespace

void nonzero_xor_bits_u8(const std::uint8_t* data, const std::uint8_t* pattern, std::size_t period,
                         std::size_t units, std::uint32_t* out) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t u = 0; u < units; ++u) {
    const __m256i x = _mm256_xor_si256(load(data + u * kUnit), load(pattern + (u * kUnit) % period));
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
    out[u] = ~eq;
  }
}

void nonzero_xor_bits_u16(const std::uint16_t* data, const std::uint16_t* pattern,
                          std::size_t period, std::size_t units, std::uint32_t* out) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t u = 0; u < units; ++u) {
    const std::uint16_t* d = data + u * kUnit;
    const std::uint16_t* p = pattern + (u * kUnit) % period;
    const __m256i lo = _mm256_cmpeq_epi16(_mm256_xor_si256(load(d), load(p)), zero);
    const __m256i hi = _mm256_cmpeq_epi16(_mm256_xor_si256(load(d + 16), load(p + 16)), zero);
    // packs interleaves 128-bit halves; the permute restores element order.
    const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(lo, hi), 0xD8);
    out[u] = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
  }
}

void nonzero_xor_bits_u32(const std::uint32_t* data, const std::uint32_t* pattern,
                          std::size_t period, std::size_t units, std::uint32_t* out) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t u = 0; u < units; ++u) {
    const std::uint32_t* d = data + u * kUnit;
    const std::uint32_t* p = pattern + (u * kUnit) % period;
    std::uint32_t eq = 0;
    for (int part = 0; part < 4; ++part) {
      const __m256i x = _mm256_xor_si256(load(d + 8 * part), load(p + 8 * part));
      const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
      eq |= static_cast<std::uint32_t>(bits) << (8 * part);
    }
    out[u] = ~eq;
  }
}

}  // namespace branchnum::simd::avx2
