#pragma once

// Differential and linear branch numbers of square matrices over GF(q).
//
//   B_d(M) = min over x != 0 of w(x) + w(Mx)
//   B_l(M) = B_d(M^T)
//
// branch_new() searches only class representatives of weight up to
// floor((n+1)/2), evaluating both M and M^{-1} per representative. Two
// independent routes serve as oracles: branch_exhaustive() walks all of
// GF(q)^n, and min_distance_code() measures the code generated by [I | M].

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "branchnum/matrix.hpp"
#include "branchnum/simd.hpp"

namespace branchnum {

enum class Classification { MDS, NearMDS, Other };
enum class Algorithm { NewAlgorithm, NewAlgorithmInvolutoryPath, Exhaustive };
enum class AlgoSelector { New, Exhaustive };

std::string_view to_string(Classification c) noexcept;
std::string_view to_string(Algorithm a) noexcept;

/// Default ceiling on q^n for the exhaustive routes.
inline constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t{1} << 28;

struct EngineOptions {
  /// Shrink the maximum scanned weight once the bound drops below it.
  bool class_filter = true;
  /// Stop as soon as the bound reaches 2, the floor for non-singular input.
  bool early_exit = true;
  /// Abort row accumulation once a product can no longer improve the bound.
  bool weight_budget = true;
  /// One product per representative for involutory and Hadamard matrices.
  bool structural_fast_path = true;
  std::size_t threads = 1;
  simd::Isa isa = simd::best_available();
};

struct BranchReport {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::optional<std::size_t> branch_diff;
  std::optional<std::size_t> branch_lin;
  std::optional<Classification> classification;
  Algorithm algorithm = Algorithm::NewAlgorithm;

  std::uint64_t vectors_evaluated = 0;
  /// Multiplications performed under the row-wise cost model: k-1 per output
  /// row computed for a weight-k representative, n per row for exhaustive.
  std::uint64_t field_mults = 0;
  /// Multiplications skipped by budgeted evaluation.
  std::uint64_t field_mults_saved = 0;
  /// vectors_per_weight[k-1] representatives of weight k were evaluated.
  std::vector<std::uint64_t> vectors_per_weight;
  /// False when shards ran concurrently; the branch numbers stay exact.
  bool counters_deterministic = true;
  std::string kernel;
  std::size_t threads = 1;
  std::chrono::nanoseconds elapsed{0};
};

/// Throws Error{Singular} for singular input, Error{OutOfRange} for n = 0 or n > 64.
BranchReport branch_new(const FqMatrix& m, const EngineOptions& options = {});

/// Definition-based minimum over all non-zero x. Accepts singular matrices.
/// Throws Error{TooLarge} when q^n exceeds `guard`.
BranchReport branch_exhaustive(const FqMatrix& m, std::uint64_t guard = kDefaultSearchGuard);

/// Linear branch number, computed on the transpose. The returned report has
/// branch_lin set and branch_diff empty.
BranchReport branch_linear(const FqMatrix& m, AlgoSelector algo, const EngineOptions& options = {},
                           std::uint64_t guard = kDefaultSearchGuard);

/// Minimum weight over the non-zero codewords x . [I | M] (row vectors).
/// Equals B_d(M^T), i.e. B_l(M). Throws Error{TooLarge} when q^n exceeds `guard`.
std::size_t min_distance_code(const FqMatrix& m, std::uint64_t guard = kDefaultSearchGuard);

/// MDS iff branch_diff = n+1; NearMDS iff both numbers equal n; Other
/// otherwise. Throws Error{MissingLinear} if branch_diff = n without
/// branch_lin, Error{DomainError} without branch_diff.
Classification classify(const BranchReport& report);

/// Both numbers (per `mode`) merged into one report with classification
/// filled in whenever it is decidable.
enum class Mode { Differential, Linear, Both };
BranchReport analyze(const FqMatrix& m, Mode mode, AlgoSelector algo,
                     const EngineOptions& options = {}, std::uint64_t guard = kDefaultSearchGuard);

/// h(M, x) = w(x) + w(Mx).
std::size_t h_value(const FqMatrix& m, const FqVector& x);

}  // namespace branchnum
