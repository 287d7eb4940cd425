#include "branchnum/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace branchnum {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

double log2_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t msb = boost::multiprecision::msb(v);
  if (msb < 63) return std::log2(v.convert_to<double>());
  const std::size_t shift = msb - 62;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace branchnum
