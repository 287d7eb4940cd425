#include <doctest.h>

#include <random>
#include <vector>

#include "branchnum/simd.hpp"

using namespace branchnum;

namespace {

template <typename Lane>
void compare_isa(simd::Isa isa, std::size_t period, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Mostly small values so zero lanes and equal lanes are common.
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<std::uint64_t> wide;
  auto draw = [&]() -> Lane {
    const int r = pick(rng);
    if (r < 4) return 0;
    if (r < 7) return 1;
    return static_cast<Lane>(wide(rng));
  };
  for (std::size_t units : {1u, 2u, 3u, 7u, 64u}) {
    std::vector<Lane> data(units * simd::kUnit), pattern(period);
    for (auto& v : data) v = draw();
    for (auto& v : pattern) v = draw();
    // Force some exact cancellations.
    for (std::size_t e = 0; e < data.size(); e += 3) data[e] = pattern[e % period];
    std::vector<std::uint32_t> ref(units), got(units, 0xdeadbeef);
    simd::scalar::nonzero_xor_bits(data.data(), pattern.data(), period, units, ref.data());
    simd::nonzero_xor_bits(isa, data.data(), pattern.data(), period, units, got.data());
    REQUIRE(ref == got);
    for (std::size_t e = 0; e < data.size(); ++e) {
      const bool bit = ref[e / 32] >> (e % 32) & 1;
      REQUIRE(bit == ((data[e] ^ pattern[e % period]) != 0));
    }
  }
}

}  // namespace

TEST_CASE("dispatch reports what it picked") {
  CHECK(simd::available(simd::Isa::Scalar));
  CHECK(simd::available(simd::best_available()));
  CHECK(simd::to_string(simd::Isa::Scalar) == "scalar");
  CHECK(simd::to_string(simd::Isa::Avx2) == "avx2");
}

TEST_CASE("every available ISA matches the scalar kernel") {
  for (simd::Isa isa : {simd::Isa::Scalar, simd::Isa::Avx2}) {
    if (!simd::available(isa)) {
      MESSAGE("skipping unavailable ISA " << simd::to_string(isa));
      continue;
    }
    CAPTURE(simd::to_string(isa));
    for (std::size_t period : {32u, 64u}) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        compare_isa<std::uint8_t>(isa, period, seed);
        compare_isa<std::uint16_t>(isa, period, seed);
        compare_isa<std::uint32_t>(isa, period, seed);
      }
    }
  }
}
