#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace branchnum {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt big_pow(const BigInt& base, std::uint64_t exponent);

/// log2 of a positive integer, taken from its top 64 bits and exponent so
/// values far beyond double range stay accurate. Returns -inf for 0.
double log2_big(const BigInt& v);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace branchnum
