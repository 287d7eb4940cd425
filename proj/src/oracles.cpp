// Definition-level routes to the branch number. Nothing here shares code with
// the representative search beyond basic field arithmetic.

#include <algorithm>
#include <string>

#include "branchnum/branch.hpp"
#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

std::uint64_t space_size(std::uint64_t q, std::size_t n, std::uint64_t guard) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > guard / q) {
      throw Error(ErrorCode::TooLarge, "search space q^n = " + std::to_string(q) + "^" +
                                           std::to_string(n) + " exceeds the guard of " +
                                           std::to_string(guard));
    }
    size *= q;
  }
  if (size > guard) throw Error(ErrorCode::TooLarge, "search space exceeds the guard");
  return size;
}

// Advances x through GF(q)^n as a base-q counter; false after wrapping to zero.
bool next_vector(std::vector<Element>& x, std::uint64_t q) {
  for (auto& digit : x) {
    if (++digit < q) return true;
    digit = 0;
  }
  return false;
}

}  // namespace

std::size_t h_value(const FqMatrix& m, const FqVector& x) {
  return hamming_weight(x) + hamming_weight(mat_vec(m, x));
}

BranchReport branch_exhaustive(const FqMatrix& m, std::uint64_t guard) {
  const auto start = std::chrono::steady_clock::now();
  const Field& f = m.field();
  const std::size_t n = m.order();
  const std::uint64_t q = f.order();
  const std::uint64_t space = space_size(q, n, guard);

  std::vector<Element> x(n, 0);
  std::size_t best = 2 * n + 1;
  while (next_vector(x, q)) {
    std::size_t weight = hamming_weight(x);
    for (std::size_t i = 0; i < n; ++i) {
      Element acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(m(i, j), x[j]));
      weight += acc != 0;
    }
    best = std::min(best, weight);
  }

  BranchReport report;
  report.n = n;
  report.q = q;
  report.branch_diff = best;
  report.algorithm = Algorithm::Exhaustive;
  report.vectors_evaluated = space - 1;
  report.field_mults = (space - 1) * n * n;
  report.kernel = "reference";
  if (best != n) report.classification = classify(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::size_t min_distance_code(const FqMatrix& m, std::uint64_t guard) {
  const Field& f = m.field();
  const std::size_t n = m.order();
  const std::uint64_t q = f.order();
  space_size(q, n, guard);

  // scaled[(i * q + c) * n + j] = c * M(i, j): the message symbol x_i = c
  // contributes that row to the parity part x . M.
  std::vector<Element> scaled(n * q * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t c = 0; c < q; ++c) {
      for (std::size_t j = 0; j < n; ++j) {
        scaled[(i * q + c) * n + j] = f.mul(static_cast<Element>(c), m(i, j));
      }
    }
  }

  // partial[l] holds sum_{i < l} x_i * row_i, so moving digit l only
  // recomputes levels above it.
  std::vector<std::vector<Element>> partial(n + 1, std::vector<Element>(n, 0));
  std::vector<Element> x(n, 0);
  std::vector<std::size_t> prefix_weight(n + 1, 0);
  std::size_t best = 2 * n + 1;

  auto refresh_from = [&](std::size_t level) {
    for (std::size_t l = level; l < n; ++l) {
      const Element* row = &scaled[(l * q + x[l]) * n];
      for (std::size_t j = 0; j < n; ++j) partial[l + 1][j] = f.add(partial[l][j], row[j]);
      prefix_weight[l + 1] = prefix_weight[l] + (x[l] != 0);
    }
  };
  refresh_from(0);

  // Innermost digit is x[n-1]; carries propagate toward x[0].
  for (;;) {
    std::size_t level = n;
    while (level-- > 0) {
      if (++x[level] < q) break;
      x[level] = 0;
      if (level == 0) return best;
    }
    refresh_from(level);
    const std::size_t weight = prefix_weight[n] + hamming_weight(partial[n]);
    best = std::min(best, weight);
  }
}

BranchReport branch_linear(const FqMatrix& m, AlgoSelector algo, const EngineOptions& options,
                           std::uint64_t guard) {
  const FqMatrix mt = transpose(m);
  BranchReport report = algo == AlgoSelector::New ? branch_new(mt, options) : branch_exhaustive(mt, guard);
  report.branch_lin = report.branch_diff;
  report.branch_diff.reset();
  report.classification.reset();
  if (*report.branch_lin == report.n + 1) {
    report.classification = Classification::MDS;
  } else if (*report.branch_lin != report.n) {
    report.classification = Classification::Other;
  }
  return report;
}

Classification classify(const BranchReport& report) {
  if (!report.branch_diff) {
    throw Error(ErrorCode::DomainError, "classification needs the differential branch number");
  }
  const std::size_t diff = *report.branch_diff;
  if (diff == report.n + 1) return Classification::MDS;
  if (diff == report.n) {
    if (!report.branch_lin) {
      throw Error(ErrorCode::MissingLinear, "NearMDS decision needs the linear branch number");
    }
    return *report.branch_lin == report.n ? Classification::NearMDS : Classification::Other;
  }
  return Classification::Other;
}

BranchReport analyze(const FqMatrix& m, Mode mode, AlgoSelector algo, const EngineOptions& options,
                     std::uint64_t guard) {
  const auto start = std::chrono::steady_clock::now();
  auto run_diff = [&] { return algo == AlgoSelector::New ? branch_new(m, options) : branch_exhaustive(m, guard); };
  if (mode == Mode::Differential) return run_diff();
  if (mode == Mode::Linear) return branch_linear(m, algo, options, guard);

  BranchReport report = run_diff();
  const BranchReport lin = branch_linear(m, algo, options, guard);
  report.branch_lin = lin.branch_lin;
  report.vectors_evaluated += lin.vectors_evaluated;
  report.field_mults += lin.field_mults;
  report.field_mults_saved += lin.field_mults_saved;
  for (std::size_t i = 0; i < lin.vectors_per_weight.size(); ++i) {
    if (i >= report.vectors_per_weight.size()) report.vectors_per_weight.push_back(0);
    report.vectors_per_weight[i] += lin.vectors_per_weight[i];
  }
  report.counters_deterministic = report.counters_deterministic && lin.counters_deterministic;
  report.classification = classify(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace branchnum
