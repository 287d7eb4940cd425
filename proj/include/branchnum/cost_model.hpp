#pragma once

// Closed-form multiplication counts for the representative search and for
// the exhaustive baseline.

#include <cstddef>
#include <cstdint>

#include "branchnum/bigint.hpp"

namespace branchnum {

struct CostEstimate {
  std::size_t n = 0;
  BigInt q;
  BigInt mults_new;
  BigInt mults_new_involutory;
  BigInt mults_exhaustive;
  double log2_new = 0.0;
  double log2_exhaustive = 0.0;
};

/// 2n * sum_{k=1}^{floor((n+1)/2)} C(n,k) (k-1) (q-1)^(k-1).
BigInt cost_new(std::size_t n, const BigInt& q);
/// Half of cost_new: one product per representative.
BigInt cost_new_involutory(std::size_t n, const BigInt& q);
/// n^2 q^n.
BigInt cost_exhaustive(std::size_t n, const BigInt& q);

CostEstimate estimate(std::size_t n, const BigInt& q);

/// log2 of the exhaustive cost minus the exponent of the closed-form upper
/// bound on cost_new. Throws Error{DomainError} for q <= 2 or n < 1.
double gap_f(std::size_t n, double q);

/// Exponent of the closed-form bound: n + 3/2 + (n-1)/2 log2(q-1) + 3/2 log2 n.
double bound_exponent(std::size_t n, double q);

/// cost_new(n, q) <= 2^bound_exponent(n, q). Throws Error{DomainError} for q <= 2.
bool bound_check(std::size_t n, const BigInt& q);

/// The partial-sum inequality behind the bound:
///   sum_{k=1}^{floor((n-1)/2)} C(n,k)(k-1)(q-1)^(k-1)
///     <= C(n, floor((n+1)/2)) floor((n-1)/2) (q-1)^floor((n-1)/2)
/// evaluated exactly.
bool partial_sum_inequality(std::size_t n, const BigInt& q);

}  // namespace branchnum
