#pragma once

// Dense vectors and square matrices over GF(q).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "branchnum/gf.hpp"

namespace branchnum {

class FqVector {
 public:
  FqVector(FieldPtr field, std::size_t n);
  /// Throws Error{EntryOutOfField} when an entry is >= q.
  FqVector(FieldPtr field, std::vector<Element> entries);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Element operator[](std::size_t i) const noexcept { return entries_[i]; }
  Element& operator[](std::size_t i) noexcept { return entries_[i]; }
  std::span<const Element> entries() const noexcept { return entries_; }

  bool operator==(const FqVector& other) const noexcept;

 private:
  FieldPtr field_;
  std::vector<Element> entries_;
};

class FqMatrix {
 public:
  FqMatrix(FieldPtr field, std::size_t n);
  /// Row-major entries; n * n values, each < q.
  FqMatrix(FieldPtr field, std::size_t n, std::vector<Element> entries);

  static FqMatrix identity(FieldPtr field, std::size_t n);
  static FqMatrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Element>> rows);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t order() const noexcept { return n_; }

  Element operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * n_ + col]; }
  Element& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * n_ + col]; }
  std::span<const Element> row(std::size_t i) const noexcept { return {entries_.data() + i * n_, n_}; }
  std::span<const Element> entries() const noexcept { return entries_; }

  bool operator==(const FqMatrix& other) const noexcept;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Element> entries_;
};

std::size_t hamming_weight(std::span<const Element> x) noexcept;
inline std::size_t hamming_weight(const FqVector& x) noexcept { return hamming_weight(x.entries()); }

FqVector scale(Element c, const FqVector& x);

/// Throws Error{DimensionMismatch, FieldMismatch}.
FqVector mat_vec(const FqMatrix& m, const FqVector& x);

/// w_h(Mx) if it does not exceed `budget`, std::nullopt otherwise. Rows are
/// accumulated in order and evaluation stops at the first row that pushes the
/// weight past the budget; `rows_evaluated`, when given, receives that count.
std::optional<std::size_t> mat_vec_weight_bounded(const FqMatrix& m, const FqVector& x,
                                                  std::size_t budget,
                                                  std::size_t* rows_evaluated = nullptr);

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);

/// Gauss-Jordan elimination, pivot = first non-zero entry in the column.
/// Throws Error{Singular}.
FqMatrix mat_inv(const FqMatrix& m);

FqMatrix transpose(const FqMatrix& m);

bool is_involutory(const FqMatrix& m);

/// Recursive [[U, V], [V, U]] block structure with U, V themselves of that
/// form; n must be a power of two. Only defined for characteristic 2.
bool is_hadamard_char2(const FqMatrix& m);

/// Sum of the entries in the first row.
Element first_row_sum(const FqMatrix& m);

}  // namespace branchnum
