#include <doctest.h>

#include <random>

#include "branchnum/errors.hpp"
#include "branchnum/matrix.hpp"
#include "test_support.hpp"

using namespace branchnum;
using namespace branchnum::testing;

TEST_CASE("Khazad times e1 is the first column") {
  const FqMatrix k = khazad_matrix();
  FqVector e1(k.field_ptr(), 8);
  e1[0] = 1;
  const FqVector y = mat_vec(k, e1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(y[i] == k(i, 0));
  CHECK(hamming_weight(y) == 8);
}

TEST_CASE("bounded weight stops at the first row over budget") {
  const FqMatrix k = khazad_matrix();
  FqVector e1(k.field_ptr(), 8);
  e1[0] = 1;
  std::size_t rows = 0;
  CHECK(mat_vec_weight_bounded(k, e1, 8, &rows) == std::optional<std::size_t>(8));
  CHECK(rows == 8);
  CHECK_FALSE(mat_vec_weight_bounded(k, e1, 3, &rows).has_value());
  CHECK(rows == 4);
  CHECK_FALSE(mat_vec_weight_bounded(k, e1, 0, &rows).has_value());
  CHECK(rows == 1);
}

TEST_CASE("Khazad is involutory and Hadamard") {
  const FqMatrix k = khazad_matrix();
  CHECK(is_involutory(k));
  CHECK(mat_inv(k) == k);
  CHECK(is_hadamard_char2(k));
  CHECK(first_row_sum(k) == 0x01);
}

TEST_CASE("filter8 inverse matches the reference") {
  const FqMatrix m = filter8_matrix();
  const FqMatrix inv = mat_inv(m);
  CHECK(inv == filter8_inverse());
  CHECK(inv.row(0)[3] == 0xf4);
  CHECK(inv.row(0)[7] == 0xf4);
  CHECK(mat_mul(m, inv) == FqMatrix::identity(m.field_ptr(), 8));
  CHECK_FALSE(is_involutory(m));
  CHECK_FALSE(is_hadamard_char2(m));
}

TEST_CASE("AES MixColumns is neither involutory nor Hadamard") {
  const FqMatrix a = aes_mixcolumns();
  CHECK_FALSE(is_involutory(a));
  CHECK_FALSE(is_hadamard_char2(a));
  CHECK(all_minors_nonsingular(a));
  CHECK(mat_mul(a, mat_inv(a)) == FqMatrix::identity(a.field_ptr(), 4));
}

TEST_CASE("Anubis Hadamard layer is involutory MDS") {
  const FqMatrix h = anubis_hadamard();
  CHECK(is_hadamard_char2(h));
  CHECK(is_involutory(h));
  CHECK(all_minors_nonsingular(h));
  CHECK(all_minors_nonsingular(khazad_matrix()));
}

TEST_CASE("singular input") {
  const auto f = small_field(2);
  const FqMatrix s = FqMatrix::from_rows(f, {{1, 1}, {1, 1}});
  try {
    mat_inv(s);
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
}

TEST_CASE("entry and shape validation") {
  const auto f = small_field(4);
  CHECK_THROWS_AS(FqVector(f, std::vector<Element>{0, 4}), Error);
  CHECK_THROWS_AS(FqMatrix(f, 2, std::vector<Element>{1, 2, 3}), Error);
  const FqMatrix m = FqMatrix::identity(f, 2);
  const FqVector x(f, 3);
  try {
    mat_vec(m, x);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  const FqVector y(small_field(8), 2);
  try {
    mat_vec(m, y);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("random Hadamard matrices invert as c^-2 M") {
  std::mt19937_64 rng(31);
  for (std::uint64_t q : {4u, 8u, 16u}) {
    const auto f = small_field(q);
    std::uniform_int_distribution<Element> dist(0, static_cast<Element>(q - 1));
    for (std::size_t n : {2u, 4u, 8u}) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Element> row(n);
        for (auto& v : row) v = dist(rng);
        const FqMatrix h = hadamard_from(f, row);
        REQUIRE(is_hadamard_char2(h));
        Element c = 0;
        for (Element v : row) c = f->add(c, v);
        REQUIRE(first_row_sum(h) == c);
        if (c == 0) {
          CHECK(determinant(h) == 0);
          continue;
        }
        const FqMatrix inv = mat_inv(h);
        const Element c2inv = f->inv(f->mul(c, c));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) REQUIRE(inv(i, j) == f->mul(c2inv, h(i, j)));
        CHECK(is_involutory(h) == (c == 1));
      }
    }
  }
}

TEST_CASE("inverse undoes the product and transpose commutes with it") {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
    const auto f = small_field(q);
    std::uniform_int_distribution<Element> dist(0, static_cast<Element>(q - 1));
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const FqMatrix m = random_nonsingular(f, n, rng);
        const FqMatrix inv = mat_inv(m);
        REQUIRE(mat_mul(inv, m) == FqMatrix::identity(f, n));
        REQUIRE(transpose(transpose(m)) == m);
        REQUIRE(mat_inv(transpose(m)) == transpose(inv));
        FqVector x(f, n);
        for (std::size_t i = 0; i < n; ++i) x[i] = dist(rng);
        REQUIRE(mat_vec(inv, mat_vec(m, x)) == x);
        // Scaling x scales Mx, so weights are class invariants.
        const Element c = 1 + dist(rng) % static_cast<Element>(q - 1);
        REQUIRE(hamming_weight(scale(c, x)) == hamming_weight(x));
        REQUIRE(mat_vec(m, scale(c, x)) == scale(c, mat_vec(m, x)));
        std::size_t rows = 0;
        REQUIRE(mat_vec_weight_bounded(m, x, n, &rows) == hamming_weight(mat_vec(m, x)));
      }
    }
  }
}
