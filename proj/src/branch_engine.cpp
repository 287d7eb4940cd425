#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>

#include "branchnum/branch.hpp"
#include "branchnum/errors.hpp"
#include "branchnum/rep_enum.hpp"

namespace branchnum {

namespace {

// Candidates handed to the kernel per call.
constexpr std::uint64_t kChunk = 2048;
// Scaled-column tables larger than this are computed block by block instead.
constexpr std::uint64_t kMaxTableBytes = std::uint64_t{256} << 20;

std::size_t stride_for(std::size_t n) { return std::max<std::size_t>(8, std::bit_ceil(n)); }

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Index of the set bit of rank `j` (0-based) in `x`; x must have more than j bits set.
std::size_t select_bit(std::uint64_t x, std::size_t j) {
  for (std::size_t i = 0; i < j; ++i) x &= x - 1;
  return static_cast<std::size_t>(std::countr_zero(x));
}

class SharedBound {
 public:
  explicit SharedBound(std::size_t initial) : value_(initial) {}
  std::size_t load() const noexcept { return value_.load(std::memory_order_relaxed); }
  void improve(std::size_t candidate) noexcept {
    std::size_t current = value_.load(std::memory_order_relaxed);
    while (candidate < current &&
           !value_.compare_exchange_weak(current, candidate, std::memory_order_relaxed)) {
    }
  }

 private:
  std::atomic<std::size_t> value_;
};

struct Counters {
  std::uint64_t vectors = 0;
  std::uint64_t mults = 0;
  std::uint64_t saved = 0;

  Counters& operator+=(const Counters& o) {
    vectors += o.vectors;
    mults += o.mults;
    saved += o.saved;
    return *this;
  }
};

struct SearchRules {
  std::size_t n = 0;
  bool class_filter = true;
  bool early_exit = true;
  bool weight_budget = true;

  // True once no representative of weight >= k can lower `bound`.
  bool finished(std::size_t bound, std::size_t k) const noexcept {
    return (early_exit && bound <= 2) || (class_filter && k >= bound);
  }
  std::size_t budget(std::size_t bound, std::size_t k) const noexcept {
    if (!weight_budget) return n;
    return bound > k + 1 ? bound - k - 1 : 0;
  }
};

// c * (column j of M) for every c in GF(q), each padded to `stride` lanes.
template <typename Lane>
class ScaledColumns {
 public:
  ScaledColumns(const FqMatrix& m, std::size_t stride)
      : m_(&m), n_(m.order()), q_(m.field().order()), stride_(stride) {
    const std::uint64_t bytes = n_ * q_ * stride_ * sizeof(Lane);
    if (bytes > kMaxTableBytes) return;
    table_.assign(n_ * q_ * stride_ + 2 * simd::kUnit, 0);
    const Field& f = m.field();
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::uint64_t c = 1; c < q_; ++c) {
        Lane* row = table_.data() + (j * q_ + c) * stride_;
        for (std::size_t i = 0; i < n_; ++i) row[i] = static_cast<Lane>(f.mul(static_cast<Element>(c), m(i, j)));
      }
    }
  }

  /// `count` consecutive rows c * col_j, c = first, first+1, ...; readable for
  /// at least one kernel unit past the last row.
  const Lane* rows(std::size_t j, std::uint64_t first, std::uint64_t count, std::vector<Lane>& scratch) const {
    if (!table_.empty()) return table_.data() + (j * q_ + first) * stride_;
    scratch.assign(count * stride_ + 2 * simd::kUnit, 0);
    const Field& f = m_->field();
    for (std::uint64_t c = 0; c < count; ++c) {
      Lane* row = scratch.data() + c * stride_;
      for (std::size_t i = 0; i < n_; ++i) {
        row[i] = static_cast<Lane>(f.mul(static_cast<Element>(first + c), (*m_)(i, j)));
      }
    }
    return scratch.data();
  }

  void accumulate(std::size_t j, Element c, std::vector<Lane>& acc) const {
    const Field& f = m_->field();
    if (!table_.empty() && f.is_binary()) {
      const Lane* row = table_.data() + (j * q_ + c) * stride_;
      for (std::size_t i = 0; i < n_; ++i) acc[i] ^= row[i];
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      acc[i] = static_cast<Lane>(f.add(acc[i], f.mul(c, (*m_)(i, j))));
    }
  }

  bool materialized() const noexcept { return !table_.empty(); }

 private:
  const FqMatrix* m_;
  std::size_t n_;
  std::uint64_t q_;
  std::size_t stride_;
  std::vector<Lane> table_;
};

template <typename Lane>
struct Workspace {
  std::vector<Lane> prefix;
  std::vector<Lane> pattern;
  std::vector<Lane> scratch;
  std::vector<std::uint32_t> bits;
};

// Non-zero masks of prefix(block) + c * col_last for `count` values of c.
template <typename Lane>
void block_masks(const ScaledColumns<Lane>& cols, const RepStream::Block& block, std::uint64_t first,
                 std::uint64_t count, std::size_t n, std::size_t stride, const Field& field,
                 simd::Isa isa, Workspace<Lane>& ws, std::vector<std::uint64_t>& masks) {
  const std::size_t k = block.support.size();
  ws.prefix.assign(stride, 0);
  for (std::size_t t = 0; t + 1 < k; ++t) cols.accumulate(block.support[t], block.values[t], ws.prefix);
  const Lane* data = cols.rows(block.support[k - 1], first, count, ws.scratch);

  masks.resize(count);
  const std::uint64_t live = low_mask(n);
  if (!field.is_binary()) {
    for (std::uint64_t c = 0; c < count; ++c) {
      const Lane* row = data + c * stride;
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n; ++i) {
        mask |= static_cast<std::uint64_t>(field.add(ws.prefix[i], row[i]) != 0) << i;
      }
      masks[c] = mask;
    }
    return;
  }

  const std::size_t period = std::max<std::size_t>(simd::kUnit, stride);
  ws.pattern.resize(period);
  for (std::size_t i = 0; i < period; ++i) ws.pattern[i] = ws.prefix[i % stride];
  const std::size_t units = (count * stride + simd::kUnit - 1) / simd::kUnit;
  ws.bits.resize(units);
  simd::nonzero_xor_bits(isa, data, ws.pattern.data(), period, units, ws.bits.data());

  for (std::uint64_t c = 0; c < count; ++c) {
    const std::uint64_t bit = c * stride;
    std::uint64_t word;
    if (stride == 64) {
      word = ws.bits[2 * c] | (std::uint64_t{ws.bits[2 * c + 1]} << 32);
    } else {
      word = ws.bits[bit / 32] >> (bit % 32);
    }
    masks[c] = word & live;
  }
}

template <typename Lane>
class ShardWorker {
 public:
  ShardWorker(const ScaledColumns<Lane>& forward, const ScaledColumns<Lane>* inverse,
              const SearchRules& rules, const Field& field, simd::Isa isa, SharedBound& bound)
      : forward_(forward), inverse_(inverse), rules_(rules), field_(field), isa_(isa),
        bound_(bound), stride_(stride_for(rules.n)) {}

  Counters run(RepStream stream) {
    Counters counters;
    const std::size_t k = stream.k();
    const std::size_t n = rules_.n;
    const std::uint64_t per_row = k - 1;
    std::size_t bound = bound_.load();
    if (rules_.finished(bound, k)) return counters;

    RepStream::Block block;
    while (stream.next_block(block)) {
      const Element start = block.values[k - 1];
      for (std::uint64_t done = 0; done < block.count; done += kChunk) {
        bound = std::min(bound, bound_.load());
        if (rules_.finished(bound, k)) return counters;
        const std::uint64_t count = std::min(kChunk, block.count - done);
        block_masks(forward_, block, start + done, count, n, stride_, field_, isa_, ws_, fwd_masks_);
        if (inverse_) block_masks(*inverse_, block, start + done, count, n, stride_, field_, isa_, ws_, inv_masks_);

        for (std::uint64_t c = 0; c < count; ++c) {
          const std::size_t budget = rules_.budget(bound, k);
          std::size_t best = n + 1;
          auto evaluate = [&](std::uint64_t mask) {
            const auto w = static_cast<std::size_t>(std::popcount(mask));
            std::size_t rows = n;
            if (w > budget) {
              rows = select_bit(mask, budget) + 1;
            } else {
              best = std::min(best, w);
            }
            counters.mults += rows * per_row;
            counters.saved += (n - rows) * per_row;
          };
          evaluate(fwd_masks_[c]);
          if (inverse_) evaluate(inv_masks_[c]);
          ++counters.vectors;

          if (best + k < bound) {
            bound = best + k;
            bound_.improve(bound);
            if (rules_.finished(bound, k)) return counters;
          }
        }
      }
    }
    return counters;
  }

 private:
  const ScaledColumns<Lane>& forward_;
  const ScaledColumns<Lane>* inverse_;
  const SearchRules& rules_;
  const Field& field_;
  simd::Isa isa_;
  SharedBound& bound_;
  std::size_t stride_;
  Workspace<Lane> ws_;
  std::vector<std::uint64_t> fwd_masks_;
  std::vector<std::uint64_t> inv_masks_;
};

struct SearchOutcome {
  std::size_t bound = 0;
  Counters counters;
  std::vector<std::uint64_t> per_weight;
};

template <typename Lane>
SearchOutcome search(const FqMatrix& m, const FqMatrix* inverse, const SearchRules& rules,
                     simd::Isa isa, std::size_t threads) {
  const std::size_t n = m.order();
  const std::size_t stride = stride_for(n);
  const ScaledColumns<Lane> forward(m, stride);
  std::optional<ScaledColumns<Lane>> backward;
  if (inverse) backward.emplace(*inverse, stride);
  const ScaledColumns<Lane>* backward_ptr = backward ? &*backward : nullptr;

  SharedBound bound(n + 1);
  SearchOutcome out;
  out.per_weight.assign((n + 1) / 2, 0);
  for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
    if (rules.finished(bound.load(), k)) break;
    Counters level;
    if (threads <= 1) {
      ShardWorker<Lane> worker(forward, backward_ptr, rules, m.field(), isa, bound);
      level += worker.run(RepStream(m.field_ptr(), n, k));
    } else {
      auto shards = rep_split(m.field_ptr(), n, k, threads);
      std::vector<Counters> results(shards.size());
      {
        std::vector<std::jthread> pool;
        pool.reserve(shards.size());
        for (std::size_t s = 0; s < shards.size(); ++s) {
          pool.emplace_back([&, s] {
            ShardWorker<Lane> worker(forward, backward_ptr, rules, m.field(), isa, bound);
            results[s] = worker.run(std::move(shards[s]));
          });
        }
      }
      for (const auto& r : results) level += r;
    }
    out.per_weight[k - 1] = level.vectors;
    out.counters += level;
  }
  out.bound = bound.load();
  return out;
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::MDS: return "MDS";
    case Classification::NearMDS: return "NearMDS";
    case Classification::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::NewAlgorithm: return "NewAlgorithm";
    case Algorithm::NewAlgorithmInvolutoryPath: return "NewAlgorithmInvolutoryPath";
    case Algorithm::Exhaustive: return "Exhaustive";
  }
  return "NewAlgorithm";
}

BranchReport branch_new(const FqMatrix& m, const EngineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = m.order();
  if (n == 0 || n > 64) {
    throw Error(ErrorCode::OutOfRange, "matrix order must be in [1, 64], got " + std::to_string(n));
  }
  const Field& field = m.field();
  const FqMatrix inverse = mat_inv(m);

  bool single_product = false;
  if (options.structural_fast_path) {
    single_product = is_involutory(m) ||
                     (is_hadamard_char2(m) && first_row_sum(m) != 0);
  }
  const FqMatrix* inverse_ptr = single_product ? nullptr : &inverse;

  SearchRules rules;
  rules.n = n;
  rules.class_filter = options.class_filter;
  rules.early_exit = options.early_exit;
  rules.weight_budget = options.weight_budget;
  const simd::Isa isa = simd::available(options.isa) ? options.isa : simd::Isa::Scalar;
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  SearchOutcome outcome;
  std::string kernel;
  if (!field.is_binary()) {
    outcome = search<std::uint32_t>(m, inverse_ptr, rules, isa, threads);
    kernel = "generic";
  } else if (field.degree() <= 8) {
    outcome = search<std::uint8_t>(m, inverse_ptr, rules, isa, threads);
  } else if (field.degree() <= 16) {
    outcome = search<std::uint16_t>(m, inverse_ptr, rules, isa, threads);
  } else {
    outcome = search<std::uint32_t>(m, inverse_ptr, rules, isa, threads);
  }
  if (kernel.empty()) kernel = std::string(simd::to_string(isa));

  if (outcome.bound < 2 || outcome.bound > n + 1) {
    throw std::logic_error("branch number " + std::to_string(outcome.bound) + " outside [2, n+1]");
  }

  BranchReport report;
  report.n = n;
  report.q = field.order();
  report.branch_diff = outcome.bound;
  report.algorithm = single_product ? Algorithm::NewAlgorithmInvolutoryPath : Algorithm::NewAlgorithm;
  report.vectors_evaluated = outcome.counters.vectors;
  report.field_mults = outcome.counters.mults;
  report.field_mults_saved = outcome.counters.saved;
  report.vectors_per_weight = std::move(outcome.per_weight);
  // Weights cut off by the class filter were never scanned.
  while (!report.vectors_per_weight.empty() && report.vectors_per_weight.back() == 0) {
    report.vectors_per_weight.pop_back();
  }
  report.counters_deterministic = threads == 1;
  report.kernel = std::move(kernel);
  report.threads = threads;
  if (outcome.bound != n) report.classification = classify(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace branchnum
