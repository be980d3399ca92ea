#include <doctest.h>

#include "rbfam/errors.hpp"
#include "rbfam/matched.hpp"
#include "rbfam/standard.hpp"
#include "support.hpp"

using namespace rbfam;

namespace {

const Scalar L = Scalar::lambda();

MatchedPair row_pair(long l, long r, long tr, long tl) {
  MatchedPair mp = MatchedPair::zero(standard::line_R(), standard::line_B());
  mp.tri_l.at(0, 0, 0) = l;
  mp.tri_r.at(0, 0, 0) = r;
  mp.harp_r.at(0, 0, 0) = tr;
  mp.harp_l.at(0, 0, 0) = tl;
  return mp;
}

Matrix unit_span(size_t n, size_t i) { return Matrix::from_columns(n, {unit_vec(n, i)}); }

}  // namespace

TEST_CASE("zero pair") {
  MatchedPair mp = MatchedPair::zero(standard::line_R(), standard::line_B());
  CHECK(check_matched_pair(mp).ok());
  CHECK(build_bicrossed(mp) == direct_product(standard::line_R(), standard::line_B()));
}

TEST_CASE("single rows") {
  CHECK(check_matched_pair(row_pair(1, 1, 0, 0)).ok());
  CHECK(check_matched_pair(row_pair(1, 0, 1, 0)).ok());
  Report bad = check_matched_pair(row_pair(1, 1, 1, 1));
  REQUIRE_FALSE(bad.ok());
  for (const auto& l : bad.labels()) CHECK(l[0] == 'M');
}

TEST_CASE("published rows pass and the others fail") {
  const auto& rows = table3_published();
  CHECK(rows.size() == 5);
  int passing = 0;
  for (int bits = 0; bits < 16; ++bits) {
    std::array<int, 4> v{bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1};
    MatchedPair mp = row_pair(v[0], v[1], v[2], v[3]);
    bool ok = check_matched_pair(mp).ok();
    bool listed = std::find(rows.begin(), rows.end(), v) != rows.end();
    CHECK(ok == listed);
    CHECK(ok == check_extending_structure(zero_extension(mp)).ok());
    passing += ok;
  }
  CHECK(passing == 5);
}

TEST_CASE("bicrossed product of row (0,0,1,1)") {
  MatchedPair mp = row_pair(0, 0, 1, 1);
  REQUIRE(check_matched_pair(mp).ok());
  HomAlgebra e = build_bicrossed(mp);
  CHECK(e.mu.on_basis(0, 1) == Vec{1, 0});
  CHECK(e.mu.on_basis(1, 0) == Vec{1, 0});
  CHECK(e.mu.on_basis(1, 1) == Vec{0, 1});
  CHECK(e.P[0].column(1) == Vec{0, -L});
  CHECK(check_algebra(e).ok());
  CHECK(check_subalgebra(e, unit_span(2, 0)).ok());
  CHECK(check_subalgebra(e, unit_span(2, 1)).ok());
  CHECK(e == build_unified_product(zero_extension(mp)).algebra);

  CHECK_THROWS_AS(build_bicrossed(row_pair(1, 1, 1, 1)), InvalidInput);
}

TEST_CASE("factorization") {
  for (const auto& v : table3_published()) {
    MatchedPair mp = row_pair(v[0], v[1], v[2], v[3]);
    Factorization f = check_factorization(build_bicrossed(mp), unit_span(2, 0), unit_span(2, 1));
    CHECK(f.report.ok());
    REQUIRE(f.pair);
    CHECK(*f.pair == mp);
  }

  Factorization dp = check_factorization(direct_product(standard::line_R(), standard::line_B()), unit_span(2, 0),
                                         unit_span(2, 1));
  CHECK(dp.report.ok());
  REQUIRE(dp.pair);
  CHECK(*dp.pair == MatchedPair::zero(standard::line_R(), standard::line_B()));

  Factorization e = check_factorization(standard::plane_E(), unit_span(2, 0), unit_span(2, 1));
  CHECK_FALSE(e.report.ok());
  CHECK_FALSE(e.pair);
  CHECK(e.report.labels().count("V-block:closed-mul") == 1);

  CHECK_THROWS_AS(check_factorization(standard::plane_E(), unit_span(2, 0), unit_span(2, 0)), InvalidInput);
}

TEST_CASE("zero extension round trip") {
  MatchedPair mp = row_pair(1, 0, 1, 0);
  CHECK(pair_of(zero_extension(mp)) == mp);
  ExtendingDatum d = zero_extension(mp);
  d.f.at(0, 0, 0) = 1;
  CHECK_THROWS_AS(pair_of(d), InvalidInput);
}

TEST_CASE("incompatible algebras") {
  HomAlgebra b = standard::line_B();
  b.weight = 2;
  CHECK_THROWS_AS(check_matched_pair(MatchedPair::zero(standard::line_R(), b)), InvalidInput);
  HomAlgebra bad = standard::line_B();
  bad.P[0](0, 0) = 1;
  CHECK_THROWS_AS(check_matched_pair(MatchedPair::zero(standard::line_R(), bad)), InvalidInput);
}

TEST_CASE("seeded matched pairs") {
  testing::Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    MatchedPair mp = testing::random_matched_pair(rng);
    REQUIRE(check_matched_pair(mp).ok());
    CHECK(check_extending_structure(zero_extension(mp)).ok());
    HomAlgebra e = build_bicrossed(mp);
    CHECK(check_algebra(e).ok());
    size_t n = mp.R.dim(), m = mp.V.dim();
    Matrix rs(n + m, n), vs(n + m, m);
    for (size_t i = 0; i < n; ++i) rs(i, i) = 1;
    for (size_t p = 0; p < m; ++p) vs(n + p, p) = 1;
    Factorization f = check_factorization(e, rs, vs);
    CHECK(f.report.ok());
    REQUIRE(f.pair);
    CHECK(*f.pair == mp);
  }
}
