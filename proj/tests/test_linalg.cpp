#include "doctest.h"
#include "walg/linalg.hpp"

#include <random>

using namespace walg;

namespace {

// Cofactor expansion along the first row; exponential but independent of elimination.
Rational laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Rational term = m(0, c) * laplace_det(minor);
    det += c % 2 ? Rational(-term) : term;
  }
  return det;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zero_percent) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4), pct(0, 99);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) >= zero_percent) m(i, j) = frac(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_matrix(rng, 5, 5, 40);
      CHECK(determinant(m) == laplace_det(m));
    }
  }

  TEST_CASE("inverse and unique solve") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(rng, 4, 4, 20);
      auto inv = inverse(m);
      if (determinant(m) == 0) {
        CHECK_FALSE(inv.has_value());
        continue;
      }
      REQUIRE(inv.has_value());
      CHECK(m * *inv == Matrix::identity(4));
      Vec b{1, 2, 3, 4};
      auto x = solve_unique(m, b);
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == b);
    }
    Matrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_FALSE(inverse(singular).has_value());
    CHECK_FALSE(solve_unique(singular, Vec{1, 0}).has_value());
  }

  TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(rng, 3, 6, 30);
      auto ker = kernel(m);
      CHECK(ker.size() + rank(m) == 6);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    }
  }

  TEST_CASE("canonical basis does not depend on the spanning set") {
    Vec a{1, 2, 0}, b{0, 1, 1};
    auto c1 = canonical_basis({a, b}, 3);
    auto c2 = canonical_basis({a + b, Rational(3) * b, a - b}, 3);
    CHECK(c1 == c2);
    CHECK(c1.size() == 2);
    CHECK(c1[0][0] == 1);
  }

  TEST_CASE("sparse system matches dense elimination") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(rng, 7, 5, 50);
      Vec x0{1, frac(-1, 2), 3, 0, 2};
      Vec b = m.apply(x0);
      SparseSystem sys(5);
      for (std::size_t i = 0; i < 7; ++i) {
        SparseSystem::Row row;
        for (std::size_t j = 0; j < 5; ++j)
          if (m(i, j) != 0) row[j] = m(i, j);
        sys.add_equation(row, -b[i]);
      }
      CHECK(sys.consistent());
      CHECK(sys.rank() == rank(m));
      if (rank(m) == 5) {
        auto sol = sys.unique_solution();
        REQUIRE(sol.has_value());
        CHECK(*sol == x0);
      }
    }
    SparseSystem bad(1);
    bad.add_equation({{0, 1}}, 1);
    bad.add_equation({{0, 2}}, 1);
    CHECK_FALSE(bad.consistent());
  }
}
