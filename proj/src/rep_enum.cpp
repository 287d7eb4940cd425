#include "branchnum/rep_enum.hpp"

#include <limits>
#include <string>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

constexpr std::size_t kMaxOrder = 64;

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return static_cast<std::uint64_t>(acc);
}

void check_weight(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::OutOfRange,
                "weight " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

FqVector RepVector::to_vector(FieldPtr field, std::size_t n) const {
  FqVector out(std::move(field), n);
  for (std::size_t t = 0; t < support.size(); ++t) out[support[t]] = values[t];
  return out;
}

BigInt rep_count(std::size_t n, std::size_t k, std::uint64_t q) {
  check_weight(n, k);
  if (q < 2) throw Error(ErrorCode::OutOfRange, "field order must be at least 2");
  return binomial(n, k) * big_pow(BigInt(q - 1), k - 1);
}

RepStream::RepStream(FieldPtr field, std::size_t n, std::size_t k)
    : RepStream(field, n, k, 0, std::numeric_limits<std::uint64_t>::max()) {}

RepStream::RepStream(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t begin,
                     std::uint64_t end)
    : field_(std::move(field)), n_(n), k_(k), nonzero_(field_->order() - 1) {
  check_weight(n, k);
  if (n > kMaxOrder) {
    throw Error(ErrorCode::OutOfRange, "order " + std::to_string(n) + " exceeds 64");
  }
  const BigInt count = rep_count(n, k, field_->order());
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::OutOfRange, "|S_k| does not fit in 64 bits");
  }
  total_ = count.convert_to<std::uint64_t>();
  end_ = std::min(end, total_);
  begin_ = std::min(begin, end_);
  support_.resize(k_);
  values_.resize(k_);
  seek(begin_);
}

void RepStream::seek(std::uint64_t index) {
  position_ = index;
  pending_ = 0;
  if (index >= total_) return;

  std::uint64_t per_support = 1;
  for (std::size_t t = 1; t < k_; ++t) per_support *= nonzero_;
  std::uint64_t rank = index / per_support;
  std::uint64_t digits = index % per_support;

  std::size_t c = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    for (;; ++c) {
      const std::uint64_t with_c = binomial_u64(n_ - c - 1, k_ - i - 1);
      if (rank < with_c) break;
      rank -= with_c;
    }
    support_[i] = c++;
  }

  values_[0] = 1;
  for (std::size_t t = k_; t-- > 1;) {
    values_[t] = static_cast<Element>(1 + digits % nonzero_);
    digits /= nonzero_;
  }
}

void RepStream::step() {
  for (std::size_t t = k_; t-- > 1;) {
    if (values_[t] < nonzero_) {
      ++values_[t];
      return;
    }
    values_[t] = 1;
  }
  std::size_t i = k_;
  while (i-- > 0) {
    if (support_[i] != n_ - k_ + i) break;
    if (i == 0) return;  // past the last support
  }
  ++support_[i];
  for (std::size_t j = i + 1; j < k_; ++j) support_[j] = support_[j - 1] + 1;
}

void RepStream::advance_pending() {
  if (pending_ == 0) return;
  if (k_ >= 2 && values_[k_ - 1] + pending_ <= nonzero_) {
    values_[k_ - 1] += static_cast<Element>(pending_);
  } else {
    // The block ran the last coordinate through q-1; carry into the rest.
    if (k_ >= 2) values_[k_ - 1] = static_cast<Element>(nonzero_);
    step();
  }
  pending_ = 0;
}

bool RepStream::next(RepVector& out) {
  advance_pending();
  if (position_ >= end_) return false;
  out.support = support_;
  out.values = values_;
  ++position_;
  pending_ = 1;
  return true;
}

bool RepStream::next_block(Block& out) {
  advance_pending();
  if (position_ >= end_) return false;
  std::uint64_t count = 1;
  if (k_ >= 2) count = std::min<std::uint64_t>(end_ - position_, nonzero_ - values_[k_ - 1] + 1);
  out.support = support_;
  out.values = values_;
  out.count = count;
  position_ += count;
  pending_ = count;
  return true;
}

std::vector<RepStream> rep_split(FieldPtr field, std::size_t n, std::size_t k, std::size_t shards) {
  if (shards == 0) throw Error(ErrorCode::OutOfRange, "shard count must be at least 1");
  RepStream whole(field, n, k);
  const unsigned __int128 total = whole.total();
  std::vector<RepStream> out;
  out.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    const auto lo = static_cast<std::uint64_t>(total * s / shards);
    const auto hi = static_cast<std::uint64_t>(total * (s + 1) / shards);
    out.emplace_back(field, n, k, lo, hi);
  }
  return out;
}

}  // namespace branchnum
