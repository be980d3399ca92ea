#include <doctest.h>

#include "rbfam/errors.hpp"
#include "rbfam/flag.hpp"
#include "rbfam/matched.hpp"
#include "rbfam/standard.hpp"
#include "rbfam/table2.hpp"
#include "support.hpp"

using namespace rbfam;

namespace {

const Scalar L = Scalar::lambda();
const Scalar Z;

FlagDatum tuple_flag(const FlagTuple& t) { return flag_from_tuple(standard::line_R(), t); }

// One-point grid at the zero flag datum over line_R.
FlagGrid zero_grid() {
  FlagGrid g;
  g.l = g.r = g.a1 = g.a2 = {Vec{0}};
  g.t_r = g.t_l = {Matrix(1, 1)};
  g.k1 = g.k2 = {Scalar()};
  g.b.assign(2, {Vec{0}});
  g.kfam.assign(2, {Scalar()});
  return g;
}

}  // namespace

TEST_CASE("basic flag datums") {
  FlagDatum row1 = tuple_flag(table2_row("1").flag({{"tr", 5}, {"ke", 2}, {"ks", 2}, {"k2", 7}}));
  CHECK(check_flag(row1).ok());
  CHECK(check_flag(FlagDatum::zero(standard::line_R())).ok());
  CHECK(check_flag(FlagDatum::zero(standard::plane_E())).ok());

  FlagTuple t = table2_row("2").flag({{"tr", 3}, {"k1", 2}, {"k2", 5}});
  CHECK(t.a1 == (t.t_r - t.k1) * t.t_r);
  t.a1 += 1;
  Report r = check_flag(tuple_flag(t));
  REQUIRE_FALSE(r.ok());
  auto labels = r.labels();
  CHECK((labels.count("F9") + labels.count("F11")) > 0);

  FlagDatum bad_base = FlagDatum::zero(standard::line_R());
  bad_base.base.P[0](0, 0) = 1;
  CHECK_THROWS_AS(check_flag(bad_base), InvalidInput);
}

TEST_CASE("flag to datum") {
  ExtendingDatum z = flag_to_datum(FlagDatum::zero(standard::line_R()));
  CHECK(z == ExtendingDatum::zero(standard::line_R(), {"x"}));

  Scalar tr = 3, k2 = 4;
  FlagDatum f10 = tuple_flag(table2_row("10").flag({{"tr", tr}, {"k2", k2}}));
  HomAlgebra e = build_unified_product(flag_to_datum(f10)).algebra;
  CHECK(e.mu.on_basis(0, 1) == Vec{(1 - k2) * tr, k2});
  CHECK(flag_to_datum(f10) == testing::row10_datum(tr, k2));

  CHECK_THROWS_AS(datum_to_flag(ExtendingDatum::zero(standard::line_R(), {"x", "y"})), InvalidInput);
}

TEST_CASE("flag round trips and the validity transfer") {
  testing::Rng rng(1234);
  int valid = 0;
  for (int t = 0; t < 200; ++t) {
    FlagDatum f = t % 4 == 0 ? testing::random_table2_flag(rng) : testing::random_flag(rng);
    ExtendingDatum d = flag_to_datum(f);
    CHECK(datum_to_flag(d) == f);
    CHECK(flag_to_datum(datum_to_flag(d)) == d);
    bool ok = check_flag(f).ok();
    CHECK(ok == check_extending_structure(d).ok());
    CHECK(ok == check_algebra(build_unified_product(d).algebra).ok());
    valid += ok;
  }
  CHECK(valid >= 50);
}

TEST_CASE("flags over a two-dimensional base") {
  testing::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    ExtendingDatum d = testing::random_valid_datum(rng, 2, 1);
    FlagDatum f = datum_to_flag(d);
    CHECK(check_flag(f).ok());
    CHECK(flag_to_datum(f, d.vbasis[0]) == d);
    ExtendingDatum p = testing::perturb(d, rng);
    CHECK(check_flag(datum_to_flag(p)).ok() == check_extending_structure(p).ok());
  }
}

TEST_CASE("grid enumeration") {
  Table3Result t3 = reproduce_table3();
  CHECK(t3.found.size() == 5);
  CHECK(t3.matches);

  FlagGrid empty = zero_grid();
  empty.k2.clear();
  CHECK(empty.size() == 0);
  CHECK(enumerate_flags(standard::line_R(), empty).empty());

  FlagGrid g = zero_grid();
  g.k2 = {Scalar(0), Scalar(1)};
  auto found = enumerate_flags(standard::line_R(), g);
  REQUIRE(found.size() == 2);
  CHECK(found[0].k2 == Scalar(0));
  CHECK(found[1].k2 == Scalar(1));

  FlagGrid big = zero_grid();
  std::vector<Scalar> ten;
  for (long i = 0; i < 10; ++i) ten.push_back(i);
  big.k1 = big.k2 = ten;
  big.kfam = {ten, ten};
  big.a1 = {Vec{0}, Vec{1}};
  big.l = big.r = {Vec{0}, Vec{1}, Vec{2}, Vec{3}, Vec{4}, Vec{5}, Vec{6}, Vec{7}, Vec{8}, Vec{9}};
  CHECK(big.size() > kMaxGridPoints);
  CHECK_THROWS_AS(enumerate_flags(standard::line_R(), big), ResourceError);
}

TEST_CASE("classification table rows") {
  CHECK(table2_rows().size() == 22);
  testing::Rng rng(7);
  for (const auto& spec : table2_rows()) {
    CAPTURE(spec.id);
    for (int t = 0; t < 3; ++t) {
      Params p = random_params(spec, rng);
      CHECK_NOTHROW(check_params(spec, p));
      RowResult r = verify_table2_row(spec, p);
      CHECK(r.report.ok());
      CHECK(r.witnesses >= 1);
    }
  }
}

TEST_CASE("row 1 example") {
  Params p{{"tr", 5}, {"ke", 2}, {"ks", 3}, {"k2", 7}};
  auto ws = table2_row("1").witnesses(p);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].h == Scalar(1));
  CHECK(ws[0].g == Scalar(-5));
  CHECK(ws[0].cls == FlagTuple{Z, Z, Z, Z, Z, Z, {Z, Z}, {2, 3}, Z, 7});
  CHECK(verify_table2_row(table2_row("1"), p).report.ok());

  // psi(e1) = e1, psi(x) = g e1 + h x between the two extensions.
  ExtendingDatum cls = flag_to_datum(tuple_flag(ws[0].cls));
  ExtendingDatum row = flag_to_datum(tuple_flag(table2_row("1").flag(p)));
  Matrix psi = Matrix::identity(2);
  psi(0, 1) = ws[0].g;
  CHECK(check_morphism(psi, datum_to_extension(cls), datum_to_extension(row)).ok());
}

TEST_CASE("row 14 example") {
  Params p{{"k1", 4}};
  FlagTuple t = table2_row("14").flag(p);
  CHECK(t == FlagTuple{1, 1, Z, Z, -4, 4, {Z, Z}, {Z, Z}, Z, 1});
  auto ws = table2_row("14").witnesses(p);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].h == Scalar(1));
  CHECK(ws[0].g == Scalar(-2));
  CHECK(ws[0].cls == FlagTuple{1, 1, Z, Z, Z, Z, {Z, Z}, {Z, Z}, Z, 1});
  CHECK(verify_table2_row(table2_row("14"), p).report.ok());
}

TEST_CASE("row 15 example") {
  Params p{{"q", 3}, {"k1", 2}};
  auto ws = table2_row("15").witnesses(p);
  REQUIRE(ws.size() >= 1);
  CHECK(ws[0].h == Scalar(Rational(1, 3)));
  CHECK(ws[0].g == Scalar(Rational(-1, 3)));
  CHECK(ws[0].cls == FlagTuple{1, 1, Z, Z, 1, Z, {Z, Z}, {Z, Z}, Z, 1});
  CHECK(verify_table2_row(table2_row("15"), p).report.ok());
}

TEST_CASE("parameter checks") {
  const auto& row2 = table2_row("2");
  CHECK_THROWS_AS(check_params(row2, {{"tr", 1}, {"k1", 0}, {"k2", 1}}), InvalidInput);
  CHECK_THROWS_AS(check_params(row2, {{"tr", 1}, {"k2", 1}}), InvalidInput);
  CHECK_THROWS_AS(check_params(row2, {{"tr", 1}, {"k1", 1}, {"k2", 1}, {"zz", 1}}), InvalidInput);
  CHECK_THROWS_AS(table2_row("21"), InvalidInput);
  CHECK(row2.constraint_text().find("k1") != std::string::npos);

  testing::Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Params p = random_params(table2_row("19"), rng);
    CHECK(p.at("k2") != Scalar(0));
    CHECK(p.at("k2") != Scalar(1));
    CHECK(p.at("k2") != Scalar(-1));
  }
}

TEST_CASE("a wrong witness is caught") {
  Params p{{"tr", 3}, {"k1", 2}, {"k2", 5}};
  auto ws = table2_row("2").witnesses(p);
  ExtendingDatum cls = flag_to_datum(tuple_flag(ws[0].cls));
  ExtendingDatum row = flag_to_datum(tuple_flag(table2_row("2").flag(p)));
  Matrix g(1, 1), h(1, 1);
  g(0, 0) = ws[0].g;
  h(0, 0) = ws[0].h + 1;
  CHECK_FALSE(check_datum_equivalence(cls, row, {g, h}).report.ok());
}
