#include <doctest.h>

#include "rbfam/algebra.hpp"
#include "rbfam/errors.hpp"
#include "rbfam/standard.hpp"
#include "support.hpp"

using namespace rbfam;

namespace {

const Scalar L = Scalar::lambda();

HomAlgebra plane(std::string name = "A") {
  return HomAlgebra::zero(std::move(name), {"e1", "e2"}, FiniteSemigroup::two_element(), L);
}

bool has_at(const Report& r, const std::string& label, const std::vector<std::string>& at) {
  for (const auto& v : r.items())
    if (v.label == label && v.at == at) return true;
  return false;
}

Matrix column_span(const Vec& v) { return Matrix::from_columns(v.size(), {v}); }

}  // namespace

TEST_CASE("semigroups") {
  CHECK(semigroup_validate(FiniteSemigroup::two_element()).ok());
  CHECK(semigroup_validate(FiniteSemigroup::trivial()).ok());

  // a*a = b, a*b = a, b*a = b, b*b = a
  FiniteSemigroup bad("T", {"a", "b"}, {{1, 0}, {1, 0}});
  Report r = semigroup_validate(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(has_at(r, "semigroup-assoc", {"a", "a", "a"}));
  // Brute force over the 8 triples.
  size_t expected = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        if (bad.mul(bad.mul(i, j), k) != bad.mul(i, bad.mul(j, k))) ++expected;
  CHECK(r.size() == expected);

  FiniteSemigroup open("U", {"a", "b"}, {{0, FiniteSemigroup::kUndefined}, {1, 1}});
  CHECK(semigroup_validate(open).labels().count("semigroup-closure") == 1);
}

TEST_CASE("hom-associativity") {
  CHECK(check_hom_assoc(standard::line_R()).ok());

  HomAlgebra z = plane();
  z.theta(0, 1) = 7;
  z.theta(1, 0) = L;
  CHECK(check_hom_assoc(z).ok());

  // e1 e1 = e2, e1 e2 = e1
  HomAlgebra a = plane();
  a.mu.at(0, 0, 1) = 1;
  a.mu.at(0, 1, 0) = 1;
  a.theta = Matrix::identity(2);
  Report r = check_hom_assoc(a);
  CHECK(has_at(r, "hom-assoc", {"e1", "e1", "e1"}));
  for (const auto& v : r.items())
    if (v.at == std::vector<std::string>{"e1", "e1", "e1"}) {
      CHECK(v.lhs == Vec{1, 0});
      CHECK(v.rhs == Vec{0, 0});
    }
}

TEST_CASE("Rota-Baxter family identity") {
  CHECK(check_rb_family(standard::line_B()).ok());
  CHECK(check_rb_family(standard::plane_E()).ok());

  HomAlgebra a = plane();
  a.mu.at(0, 1, 1) = 3;
  a.mu.at(1, 1, 0) = -L;
  CHECK(check_rb_family(a).ok());

  HomAlgebra b = standard::line_B();
  b.P[0](0, 0) = L;
  CHECK_FALSE(check_rb_family(b).ok());
}

TEST_CASE("theta commutes with P") {
  HomAlgebra a = plane();
  a.theta = Matrix::identity(2);
  a.P[0](0, 1) = 5;
  a.P[1](1, 0) = L;
  CHECK(check_theta_P_commute(a).ok());
  CHECK(check_theta_P_commute(standard::plane_E()).ok());

  HomAlgebra s = plane();
  s.theta(0, 1) = 1;
  s.theta(1, 0) = 1;
  s.P[0](0, 0) = 1;
  Report r = check_theta_P_commute(s);
  REQUIRE_FALSE(r.ok());
  for (const auto& v : r.items()) CHECK(v.at[0] == "e");
}

TEST_CASE("full algebra check") {
  CHECK(check_algebra(standard::plane_E()).ok());
  CHECK(check_algebra(standard::line_R()).ok());
  CHECK(check_algebra(plane()).ok());

  testing::Rng rng(3);
  HomAlgebra d = plane();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      for (size_t k = 0; k < 2; ++k) d.mu.at(i, j, k) = static_cast<long>(rng() % 9) + 1;
  d.theta = Matrix::identity(2);
  Report r = check_algebra(d);
  REQUIRE_FALSE(r.ok());
  CHECK(r.items().front().label == "hom-assoc");
  CHECK(r.items().front().at.size() == 3);
}

TEST_CASE("reports are ordered and deterministic") {
  HomAlgebra a = plane();
  a.mu.at(0, 0, 1) = 1;
  a.mu.at(0, 1, 0) = 1;
  a.theta = Matrix::identity(2);
  a.P[0](0, 0) = 1;
  Report r1 = check_algebra(a), r2 = check_algebra(a);
  CHECK(r1.to_string() == r2.to_string());
  for (size_t i = 1; i < r1.size(); ++i)
    CHECK_FALSE(natural_less(r1.items()[i].label, r1.items()[i - 1].label));
  CHECK(natural_less("R2", "R13"));
  CHECK_FALSE(natural_less("R13", "R2"));
}

TEST_CASE("morphisms") {
  HomAlgebra e = standard::plane_E();
  CHECK(check_morphism(Matrix::identity(2), e, e).ok());

  HomAlgebra r = standard::line_R();
  Matrix two(1, 1);
  two(0, 0) = 2;
  Report bad = check_morphism(two, r, r);
  CHECK(has_at(bad, "morphism-mul", {"e1", "e1"}));

  // Inclusion of line_R as span{e1}.
  Matrix inc(2, 1);
  inc(0, 0) = 1;
  CHECK(check_morphism(inc, r, e).ok());

  CHECK_THROWS_AS(check_morphism(Matrix::identity(2), r, e), ShapeError);
  HomAlgebra other = r;
  other.weight = 1;
  CHECK_THROWS_AS(check_morphism(Matrix::identity(1), r, other), InvalidInput);
}

TEST_CASE("transport and direct products stay valid") {
  HomAlgebra e = standard::plane_E();
  Matrix t(2, 2);
  t(0, 0) = 1;
  t(0, 1) = -3;
  t(1, 1) = 1;
  HomAlgebra moved = transport(e, t);
  CHECK(check_algebra(moved).ok());
  CHECK(check_morphism(t, moved, e).ok());

  HomAlgebra p = direct_product(standard::line_R(), standard::line_B());
  CHECK(p.dim() == 2);
  CHECK(check_algebra(p).ok());
  for (const auto& h : testing::plane_seeds()) CHECK(check_algebra(h.algebra).ok());
}

TEST_CASE("bimodules") {
  Bimodule m;
  m.base = standard::line_R();
  m.vbasis = {"x"};
  m.theta_V = Matrix::identity(1);
  m.P_V.assign(2, Matrix(1, 1));
  m.P_V[0](0, 0) = -L;
  m.left = Bilinear(1, 1, 1);
  m.right = Bilinear(1, 1, 1);
  CHECK(check_bimodule(m).ok());

  CHECK(check_bimodule(regular_bimodule(standard::line_R())).ok());
  CHECK(check_bimodule(regular_bimodule(standard::plane_E())).ok());
  for (const auto& a : testing::line_seeds()) CHECK(check_bimodule(regular_bimodule(a)).ok());

  // x is acted on by e1 from the left, but P_V does not intertwine.
  m.left.at(0, 0, 0) = 1;
  m.P_V[0](0, 0) = 1;
  CHECK_FALSE(check_left_module(m).ok());
  CHECK(check_right_module(m).ok());
}

TEST_CASE("subalgebras") {
  HomAlgebra e = standard::plane_E();
  CHECK(check_subalgebra(e, column_span({1, 0})).ok());
  CHECK(check_subalgebra(e, Matrix::identity(2)).ok());

  Report r = check_subalgebra(e, column_span({0, 1}));
  REQUIRE(has_at(r, "closed-mul", {"b1", "b1"}));
  for (const auto& v : r.items())
    if (v.label == "closed-mul") CHECK(v.lhs == Vec{-9, 6});

  Matrix dep(2, 2);
  dep(0, 0) = dep(0, 1) = 1;
  CHECK_THROWS_AS(check_subalgebra(e, dep), InvalidInput);

  HomAlgebra sub = restrict_to(e, column_span({1, 0}));
  CHECK(sub.mu == standard::line_R().mu);
  CHECK(sub.P == standard::line_R().P);
}
