#include <doctest.h>

#include "rbfam/linalg.hpp"
#include "support.hpp"

using namespace rbfam;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<long>> rs) {
  Matrix m(rs.size(), rs.begin()->size());
  size_t i = 0;
  for (const auto& r : rs) {
    size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rref pivot rule") {
  Rref r = rref(rows({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}}));
  CHECK(r.pivots == std::vector<size_t>{0, 1});
  CHECK(r.m == rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
  CHECK(rank(rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(2, 3)) == 0);
}

TEST_CASE("kernel basis") {
  auto k = kernel(rows({{1, 3}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{-3, 1});
  CHECK(kernel(Matrix::identity(3)).empty());
  auto k2 = kernel(Matrix(1, 2));
  CHECK(k2 == std::vector<Vec>{Vec{1, 0}, Vec{0, 1}});
}

TEST_CASE("inverse and solve") {
  Matrix a = rows({{1, -3}, {0, 1}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv == rows({{1, 3}, {0, 1}}));
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));

  auto x = solve(rows({{1, 2}, {2, 4}}), Vec{3, 6});
  REQUIRE(x);
  CHECK(rows({{1, 2}, {2, 4}}).apply(*x) == Vec{3, 6});
  CHECK_FALSE(solve(rows({{1, 2}, {2, 4}}), Vec{1, 0}));
}

TEST_CASE("symbolic entries") {
  Scalar l = Scalar::lambda();
  Matrix a(2, 2);
  a(0, 0) = l;
  a(0, 1) = 1;
  a(1, 1) = l + 1;
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
}

TEST_CASE("random invertible matrices") {
  testing::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix a = testing::random_invertible(rng, 1 + t % 3);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(*inv * a == Matrix::identity(a.rows()));
    CHECK(same_column_space(a, Matrix::identity(a.rows())));
  }
}

TEST_CASE("bilinear application") {
  Bilinear b(2, 2, 1);
  b.at(0, 1, 0) = 2;
  b.at(1, 0, 0) = -1;
  CHECK(b.apply(Vec{1, 1}, Vec{1, 1}) == Vec{1});
  CHECK(b.on_basis(0, 1) == Vec{2});
  CHECK_FALSE(b.is_zero());
  CHECK(hcat(Matrix::identity(1), rows({{5}})) == rows({{1, 5}}));
}
