#include <doctest.h>

#include <random>

#include "ivcat/f2_matrix.hpp"

using ivcat::F2Matrix;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng() & 1U) != 0);
  return m;
}

}  // namespace

TEST_CASE("literal, identity, arithmetic") {
  const F2Matrix a{{1, 1}, {0, 1}};
  CHECK(a.rows() == 2);
  CHECK(a.get(0, 1));
  CHECK_FALSE(a.get(1, 0));
  CHECK(a * a == F2Matrix::identity(2));
  CHECK((a + a).is_zero());
  CHECK(a.transpose() == F2Matrix{{1, 0}, {1, 1}});
  CHECK(a.hconcat(F2Matrix::identity(2)) == F2Matrix{{1, 1, 1, 0}, {0, 1, 0, 1}});
  CHECK(a.column(1) == F2Matrix{{1}, {1}});
  CHECK(F2Matrix(0, 3).empty());
}

TEST_CASE("rank over GF(2)") {
  CHECK(F2Matrix{{1, 1}, {1, 1}}.rank() == 1);
  CHECK(F2Matrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}.rank() == 2);
  CHECK(F2Matrix::identity(70).rank() == 70);
  CHECK(F2Matrix(3, 4).rank() == 0);
}

TEST_CASE("kernel and column space on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 9;
    const F2Matrix m = random_matrix(rows, cols, rng);
    const F2Matrix k = m.kernel_basis();
    CHECK(k.rows() == cols);
    CHECK(k.cols() + m.rank() == cols);
    if (k.cols() > 0) {
      CHECK((m * k).is_zero());
      CHECK(k.rank() == k.cols());
    }
    const F2Matrix c = m.column_space_basis();
    CHECK(c.cols() == m.rank());
    CHECK(m.hconcat(c).rank() == m.rank());
  }
}

TEST_CASE("solve finds solutions exactly when consistent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const F2Matrix a = random_matrix(rows, cols, rng);
    const F2Matrix x = random_matrix(cols, 2, rng);
    const F2Matrix rhs = a * x;
    const auto solved = a.solve(rhs);
    REQUIRE(solved.has_value());
    CHECK(a * *solved == rhs);
    const F2Matrix other = random_matrix(rows, 1, rng);
    const bool consistent = a.hconcat(other).rank() == a.rank();
    CHECK(a.solve(other).has_value() == consistent);
  }
}

TEST_CASE("to_string") {
  CHECK(F2Matrix{{1, 0}}.to_string() == "1x2\n10");
}
