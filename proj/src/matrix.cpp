#include "branchnum/matrix.hpp"

#include <algorithm>
#include <string>

#include "branchnum/errors.hpp"

namespace branchnum {

namespace {

void check_entries(const Field& field, std::span<const Element> entries) {
  for (auto e : entries) {
    if (!field.contains(e)) {
      throw Error(ErrorCode::EntryOutOfField,
                  "entry " + std::to_string(e) + " is not an element of " + field.describe());
    }
  }
}

void check_same_field(const Field& a, const Field& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

}  // namespace

FqVector::FqVector(FieldPtr field, std::size_t n) : field_(std::move(field)), entries_(n, 0) {}

FqVector::FqVector(FieldPtr field, std::vector<Element> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  check_entries(*field_, entries_);
}

bool FqVector::operator==(const FqVector& other) const noexcept {
  return *field_ == *other.field_ && entries_ == other.entries_;
}

FqMatrix::FqMatrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, 0) {}

FqMatrix::FqMatrix(FieldPtr field, std::size_t n, std::vector<Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix of order " + std::to_string(n_) +
                                                  " needs " + std::to_string(n_ * n_) + " entries");
  }
  check_entries(*field_, entries_);
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
  FqMatrix id(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

FqMatrix FqMatrix::from_rows(FieldPtr field,
                             std::initializer_list<std::initializer_list<Element>> rows) {
  const std::size_t n = rows.size();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix rows must have n entries");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return FqMatrix(std::move(field), n, std::move(entries));
}

bool FqMatrix::operator==(const FqMatrix& other) const noexcept {
  return n_ == other.n_ && *field_ == *other.field_ && entries_ == other.entries_;
}

std::size_t hamming_weight(std::span<const Element> x) noexcept {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Element e) { return e != 0; }));
}

FqVector scale(Element c, const FqVector& x) {
  FqVector out(x.field_ptr(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.field().mul(c, x[i]);
  return out;
}

FqVector mat_vec(const FqMatrix& m, const FqVector& x) {
  check_same_field(m.field(), x.field());
  if (m.order() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix/vector dimensions disagree");
  }
  const Field& f = m.field();
  FqVector out(m.field_ptr(), m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    Element acc = 0;
    for (std::size_t j = 0; j < m.order(); ++j) acc = f.add(acc, f.mul(m(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

std::optional<std::size_t> mat_vec_weight_bounded(const FqMatrix& m, const FqVector& x,
                                                  std::size_t budget,
                                                  std::size_t* rows_evaluated) {
  check_same_field(m.field(), x.field());
  if (m.order() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix/vector dimensions disagree");
  }
  const Field& f = m.field();
  std::size_t weight = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    Element acc = 0;
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (x[j] != 0) acc = f.add(acc, f.mul(m(i, j), x[j]));
    }
    if (acc != 0 && ++weight > budget) {
      if (rows_evaluated) *rows_evaluated = i + 1;
      return std::nullopt;
    }
  }
  if (rows_evaluated) *rows_evaluated = m.order();
  return weight;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
  check_same_field(a.field(), b.field());
  if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "matrix orders disagree");
  const Field& f = a.field();
  const std::size_t n = a.order();
  FqMatrix out(a.field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

FqMatrix mat_inv(const FqMatrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.order();
  FqMatrix work = m;
  FqMatrix inv = FqMatrix::identity(m.field_ptr(), n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Element scale_by = f.inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = f.mul(scale_by, work(col, j));
      inv(col, j) = f.mul(scale_by, inv(col, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Element factor = work(r, col);
      if (r == col || factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = f.sub(work(r, j), f.mul(factor, work(col, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

FqMatrix transpose(const FqMatrix& m) {
  FqMatrix out(m.field_ptr(), m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

bool is_involutory(const FqMatrix& m) {
  return mat_mul(m, m) == FqMatrix::identity(m.field_ptr(), m.order());
}

namespace {

bool hadamard_block(const FqMatrix& m, std::size_t r0, std::size_t c0, std::size_t size) {
  if (size == 1) return true;
  const std::size_t half = size / 2;
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      if (m(r0 + i, c0 + j) != m(r0 + half + i, c0 + half + j)) return false;
      if (m(r0 + i, c0 + half + j) != m(r0 + half + i, c0 + j)) return false;
    }
  }
  return hadamard_block(m, r0, c0, half) && hadamard_block(m, r0, c0 + half, half);
}

}  // namespace

bool is_hadamard_char2(const FqMatrix& m) {
  const std::size_t n = m.order();
  if (m.field().characteristic() != 2) return false;
  if (n == 0 || (n & (n - 1)) != 0) return false;
  return hadamard_block(m, 0, 0, n);
}

Element first_row_sum(const FqMatrix& m) {
  Element acc = 0;
  for (auto e : m.row(0)) acc = m.field().add(acc, e);
  return acc;
}

}  // namespace branchnum
