#pragma once
/**
 * @file algebra.hpp
 * @brief Rota-Baxter family Hom-associative algebras by structure constants,
 * their morphisms and bimodules, and the axiom checkers.
 *
 * Convention: x_i * x_j = sum_k mu.at(i,j,k) x_k.
 */

#include <string>
#include <vector>

#include "rbfam/linalg.hpp"
#include "rbfam/report.hpp"
#include "rbfam/semigroup.hpp"

namespace rbfam {

struct HomAlgebra {
  std::string name;
  std::vector<std::string> basis;
  FiniteSemigroup semigroup;
  Scalar weight;
  Bilinear mu;
  Matrix theta;
  // P[w] for each semigroup element index w.
  std::vector<Matrix> P;

  size_t dim() const { return basis.size(); }
  Vec mul(const Vec& u, const Vec& v) const { return mu.apply(u, v); }
  void validate_shape() const;

  // All structure maps zero.
  static HomAlgebra zero(std::string name, std::vector<std::string> basis, FiniteSemigroup s,
                         Scalar weight);
};

// Compares structure and basis names, not the algebra's own name.
bool operator==(const HomAlgebra& a, const HomAlgebra& b);

Report check_hom_assoc(const HomAlgebra& a);
Report check_rb_family(const HomAlgebra& a);
Report check_theta_P_commute(const HomAlgebra& a);
Report check_algebra(const HomAlgebra& a);

// phi is B.dim() x A.dim().
Report check_morphism(const Matrix& phi, const HomAlgebra& a, const HomAlgebra& b);

// The columns of span must be linearly independent.
Report check_subalgebra(const HomAlgebra& e, const Matrix& span);

// Structure induced on a subalgebra, in the basis given by the columns of span.
HomAlgebra restrict_to(const HomAlgebra& e, const Matrix& span,
                       std::vector<std::string> names = {});

// Structure A' on the same space such that T : A' -> A is an isomorphism.
HomAlgebra transport(const HomAlgebra& a, const Matrix& t);

// Block-diagonal product; semigroups and weights must agree.
HomAlgebra direct_product(const HomAlgebra& a, const HomAlgebra& b, std::string name = "");

struct Bimodule {
  HomAlgebra base;
  std::vector<std::string> vbasis;
  Matrix theta_V;
  std::vector<Matrix> P_V;
  Bilinear left;   // base x V -> V
  Bilinear right;  // V x base -> V

  size_t dim() const { return vbasis.size(); }
  void validate_shape() const;
};

// The base acting on itself by multiplication.
Bimodule regular_bimodule(const HomAlgebra& a);

Report check_left_module(const Bimodule& m);
Report check_right_module(const Bimodule& m);
Report check_bimodule(const Bimodule& m);

}  // namespace rbfam
