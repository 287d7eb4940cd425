#pragma once

// Arithmetic in GF(p^m), polynomial basis.
//
// An element is stored as its canonical integer encoding: base-p digit i is
// the coefficient of x^i. For p = 2 this is the usual bit-packed form, so the
// byte 0x03 is x + 1. Encodings of non-zero elements are exactly 1 .. q-1.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace branchnum {

using Element = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  enum class Backend { LogTables, Polynomial };

  /// `poly` lists coefficients from x^0 up to x^m; it must be monic of degree m
  /// and irreducible over GF(p). Throws Error{NotPrime, Reducible, DegreeMismatch}.
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly);

  /// Same, with the polynomial given in integer encoding (0x11D for
  /// x^8+x^4+x^3+x^2+1).
  static FieldPtr make(std::uint32_t p, std::uint32_t m, std::uint64_t encoded_poly);
  static FieldPtr make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& poly() const noexcept { return poly_; }
  std::uint64_t encoded_poly() const noexcept { return encoded_; }
  Backend backend() const noexcept { return backend_; }
  bool is_binary() const noexcept { return p_ == 2; }

  bool contains(std::uint64_t v) const noexcept { return v < q_; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  /// Throws Error{InvOfZero}.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Schoolbook multiply-and-reduce, independent of the table backend.
  Element mul_poly(Element a, Element b) const noexcept;

  /// Generator of the multiplicative group (only meaningful for LogTables).
  Element generator() const noexcept { return generator_; }

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
  }

  std::string describe() const;

 private:
  void check_irreducible() const;
  void build_tables();
  Element add_digits(Element a, Element b, bool subtract) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> poly_;
  std::uint64_t encoded_ = 0;
  Backend backend_ = Backend::Polynomial;
  Element generator_ = 0;
  // log_[a] for a in 1..q-1; exp_ has 2(q-1) entries so log sums need no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;
};

bool is_prime(std::uint64_t v) noexcept;

/// Parses "03_x", "0x03", "03" (hex) into an integer. Throws std::invalid_argument.
std::uint64_t parse_hex_element(std::string_view token);

}  // namespace branchnum
