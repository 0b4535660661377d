#include <numeric>
#include <random>

#include "doctest.h"
#include "mdslab/matrix.hpp"

using namespace mdslab;

namespace {

// Cofactor expansion along the first row.
Elem cofactor_det(const Field& f, const std::vector<Vec>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Elem acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    Elem term = f.mul(a[0][j], cofactor_det(f, minor));
    acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> el(0, f.q() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, el(rng));
  return m;
}

}  // namespace

TEST_CASE("rank") {
  auto f = Field::make(11);
  CHECK(rank(Matrix(f, 3, 4)) == 0);
  auto v = Matrix::from_rows(f, {{1, 1, 1, 1}, {3, 4, 5, 6}, {9, 5, 3, 3}, {5, 9, 4, 7}});
  CHECK(cofactor_det(f, v.to_rows()) != 0);
  CHECK(rank(v) == 4);
  // Generator G_3 of the [6,3,4] ESGRS code on S = {3,...,7}: rows 1, a, a^3 plus the tail column.
  auto g3 = Matrix::from_rows(f, {{1, 1, 1, 1, 1, 0}, {3, 4, 5, 6, 7, 0}, {5, 9, 4, 7, 2, 1}});
  CHECK(rank(g3) == 3);
}

TEST_CASE("determinant") {
  auto f = Field::make(11);
  CHECK(determinant(Matrix::from_rows(f, {{1, 1}, {3, 4}})) == 1);
  CHECK(determinant(Matrix::identity(f, 5)) == 1);
  auto v = Matrix::from_rows(f, {{1, 1, 1}, {3, 4, 5}, {9, 5, 3}});
  CHECK(cofactor_det(f, v.to_rows()) == 2);
  CHECK(determinant(v) == 2);
  CHECK_THROWS_AS(determinant(Matrix(f, 2, 3)), NonSquare);
}

TEST_CASE("determinant agrees with cofactor expansion and is multiplicative") {
  std::mt19937 rng(11);
  for (auto f : {Field::make(11), Field::make(2, 3), Field::make(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + trial % 6;
      auto a = random_matrix(f, n, n, rng);
      auto b = random_matrix(f, n, n, rng);
      if (n <= 5) REQUIRE(determinant(a) == cofactor_det(f, a.to_rows()));
      REQUIRE(determinant(a * b) == f.mul(determinant(a), determinant(b)));
      REQUIRE(rank(a) == rank(a.transpose()));
      REQUIRE(cols_independent(a, std::vector<std::size_t>([n] {
                std::vector<std::size_t> idx(n);
                std::iota(idx.begin(), idx.end(), 0);
                return idx;
              }())) == (determinant(a) != 0));
    }
  }
}

TEST_CASE("rank is transpose invariant on rectangles") {
  std::mt19937 rng(3);
  auto f = Field::make(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(f, 1 + trial % 4, 2 + trial % 5, rng);
    REQUIRE(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("cols_independent") {
  auto f = Field::make(11);
  auto g3 = Matrix::from_rows(f, {{1, 1, 1, 1, 1, 0}, {3, 4, 5, 6, 7, 0}, {5, 9, 4, 7, 2, 1}});
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      for (std::size_t c = b + 1; c < 5; ++c) CHECK(cols_independent(g3, std::vector<std::size_t>{a, b, c}));
  auto z = Matrix::from_rows(f, {{1, 0, 2}, {0, 0, 1}});
  CHECK_FALSE(cols_independent(z, std::vector<std::size_t>{0, 1}));
  CHECK_THROWS_AS(cols_independent(z, std::vector<std::size_t>{0, 3}), IndexOutOfRange);

  auto f2 = Field::make(2);
  auto hamming = Matrix::from_rows(f2, {{1, 0, 0, 0, 0, 1, 1, 1},
                                        {0, 1, 0, 0, 1, 0, 1, 1},
                                        {0, 0, 1, 0, 1, 1, 0, 1},
                                        {0, 0, 0, 1, 1, 1, 1, 0}});
  CHECK(rank(hamming.select_columns(std::vector<std::size_t>{0, 1, 2, 3})) == 4);
  CHECK(cols_independent(hamming, std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST_CASE("inner and star products") {
  auto f = Field::make(11);
  CHECK(inner_product(f, Vec{1, 2, 3}, Vec{3, 2, 1}) == 10);
  CHECK(inner_product(f, Vec(5, 1), Vec(5, 1)) == 5);
  CHECK_THROWS_AS(inner_product(f, Vec{1}, Vec{1, 2}), LengthMismatch);
  CHECK(star_product(f, Vec{2, 3}, Vec{3, 4}) == Vec{6, 1});
  CHECK(star_product(f, Vec{7, 10, 5}, Vec(3, 1)) == Vec{7, 10, 5});
  CHECK_THROWS_AS(star_product(f, Vec{1}, Vec{}), LengthMismatch);
}

TEST_CASE("rref, inverse and null space") {
  std::mt19937 rng(5);
  auto f = Field::make(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(f, 3, 6, rng);
    auto ech = a.rref();
    REQUIRE(ech.reduced.rows() == rank(a));
    // Reducing twice changes nothing, and row space is preserved.
    REQUIRE(ech.reduced.rref().reduced == ech.reduced);
    auto ns = right_null_space(a);
    REQUIRE(ns.rows() == 6 - rank(a));
    for (std::size_t i = 0; i < ns.rows(); ++i)
      for (std::size_t r = 0; r < a.rows(); ++r) REQUIRE(inner_product(f, a.row(r), ns.row(i)) == 0);
    auto sq = random_matrix(f, 4, 4, rng);
    if (determinant(sq) != 0) REQUIRE(sq * inverse(sq) == Matrix::identity(f, 4));
    else REQUIRE_THROWS_AS(inverse(sq), DivisionByZero);
  }
}

TEST_CASE("text format round trip") {
  auto f = Field::make(2, 3);
  auto m = Matrix::from_rows(f, {{1, 7, 0}, {3, 2, 5}});
  CHECK(Matrix::parse_text(f, m.to_text()) == m);
  CHECK_THROWS_AS(Matrix::parse_text(f, "1 8\n"), ParseError);
  CHECK_THROWS_AS(Matrix::parse_text(f, "1 2\n3\n"), LengthMismatch);
}
