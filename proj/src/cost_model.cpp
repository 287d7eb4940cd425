#include "branchnum/cost_model.hpp"

#include <cmath>
#include <string>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

// sum_{k=1}^{top} C(n,k) (k-1) (q-1)^(k-1)
BigInt weighted_class_sum(std::size_t n, std::size_t top, const BigInt& q) {
  BigInt sum = 0;
  for (std::size_t k = 2; k <= top; ++k) {
    sum += binomial(n, k) * (k - 1) * big_pow(q - 1, k - 1);
  }
  return sum;
}

void require_domain(std::size_t n, double q) {
  if (n < 1 || !(q > 2.0)) {
    throw Error(ErrorCode::DomainError, "needs n >= 1 and q > 2 (got n=" + std::to_string(n) +
                                            ", q=" + std::to_string(q) + ")");
  }
}

}  // namespace

BigInt cost_new(std::size_t n, const BigInt& q) {
  return 2 * BigInt(n) * weighted_class_sum(n, (n + 1) / 2, q);
}

BigInt cost_new_involutory(std::size_t n, const BigInt& q) {
  return BigInt(n) * weighted_class_sum(n, (n + 1) / 2, q);
}

BigInt cost_exhaustive(std::size_t n, const BigInt& q) {
  return BigInt(n) * BigInt(n) * big_pow(q, n);
}

CostEstimate estimate(std::size_t n, const BigInt& q) {
  CostEstimate e;
  e.n = n;
  e.q = q;
  e.mults_new = cost_new(n, q);
  e.mults_new_involutory = cost_new_involutory(n, q);
  e.mults_exhaustive = cost_exhaustive(n, q);
  e.log2_new = log2_big(e.mults_new);
  e.log2_exhaustive = log2_big(e.mults_exhaustive);
  return e;
}

double bound_exponent(std::size_t n, double q) {
  require_domain(n, q);
  const double nd = static_cast<double>(n);
  return nd + 1.5 + (nd - 1.0) / 2.0 * std::log2(q - 1.0) + 1.5 * std::log2(nd);
}

double gap_f(std::size_t n, double q) {
  require_domain(n, q);
  const double nd = static_cast<double>(n);
  return (nd * std::log2(q) + 2.0 * std::log2(nd)) - bound_exponent(n, q);
}

bool bound_check(std::size_t n, const BigInt& q) {
  const double exponent = bound_exponent(n, q.convert_to<double>());
  const BigInt cost = cost_new(n, q);
  if (cost == 0) return true;
  return log2_big(cost) <= exponent;
}

bool partial_sum_inequality(std::size_t n, const BigInt& q) {
  const BigInt lhs = weighted_class_sum(n, (n - 1) / 2, q);
  const std::size_t half = (n - 1) / 2;
  const BigInt rhs = binomial(n, (n + 1) / 2) * half * big_pow(q - 1, half);
  return lhs <= rhs;
}

}  // namespace branchnum
