#pragma once

// Streaming enumeration of S_k: the weight-k vectors of GF(q)^n whose first
// non-zero coordinate is 1. Every scalar-multiple class of weight-k vectors
// has exactly one member in S_k.
//
// Order: supports in lexicographic order; within a support the k-1 free
// values run odometer style over 1 .. q-1, last coordinate fastest. Index i
// of S_k therefore decomposes as
//   i = support_rank * (q-1)^(k-1) + sum_t (values[t] - 1) * (q-1)^(k-1-t).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "branchnum/bigint.hpp"
#include "branchnum/gf.hpp"
#include "branchnum/matrix.hpp"

namespace branchnum {

struct RepVector {
  std::vector<std::size_t> support;
  std::vector<Element> values;

  std::size_t weight() const noexcept { return support.size(); }
  FqVector to_vector(FieldPtr field, std::size_t n) const;
  bool operator==(const RepVector&) const = default;
};

/// C(n, k) * (q-1)^(k-1). Throws Error{OutOfRange} unless 1 <= k <= n, q >= 2.
BigInt rep_count(std::size_t n, std::size_t k, std::uint64_t q);

class RepStream {
 public:
  /// Vectors sharing a support and every value but the last. The last value
  /// takes `count` consecutive encodings starting at values.back().
  struct Block {
    std::span<const std::size_t> support;
    std::span<const Element> values;
    std::uint64_t count = 0;
  };

  /// The whole of S_k. Throws Error{OutOfRange} for k outside [1, n], n > 64,
  /// or |S_k| beyond 64 bits.
  RepStream(FieldPtr field, std::size_t n, std::size_t k);
  /// The slice [begin, end) of S_k.
  RepStream(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t begin, std::uint64_t end);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::uint64_t begin_index() const noexcept { return begin_; }
  std::uint64_t end_index() const noexcept { return end_; }
  std::uint64_t size() const noexcept { return end_ - begin_; }
  /// Number of elements of S_k, i.e. the index space the stream slices.
  std::uint64_t total() const noexcept { return total_; }

  bool next(RepVector& out);
  /// The span members of `out` stay valid until the next call.
  bool next_block(Block& out);

 private:
  void seek(std::uint64_t index);
  void step();
  void advance_pending();

  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t nonzero_;  // q - 1
  std::uint64_t total_ = 0;
  std::uint64_t begin_ = 0;
  std::uint64_t end_ = 0;
  std::uint64_t position_ = 0;
  std::uint64_t pending_ = 0;
  std::vector<std::size_t> support_;
  std::vector<Element> values_;
};

/// `shards` disjoint consecutive slices whose concatenation is S_k.
/// Throws Error{OutOfRange} for shards == 0 and as RepStream.
std::vector<RepStream> rep_split(FieldPtr field, std::size_t n, std::size_t k, std::size_t shards);

}  // namespace branchnum
