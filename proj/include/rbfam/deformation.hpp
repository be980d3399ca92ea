#pragma once
/**
 * @file deformation.hpp
 * @brief Deformation maps d : V -> R of an extending datum, deformed
 * algebras V_d, the correspondence with complements of R, equivalence of
 * deformation maps, and solving/indexing when V and R are one-dimensional.
 */

#include <optional>
#include <string>
#include <vector>

#include "rbfam/extending.hpp"

namespace rbfam {

struct DeformationMap {
  ExtendingDatum datum;
  Matrix d;  // n x m
};

// A subspace of the host spanned by the columns of span (N x m).
struct Complement {
  UnifiedProduct host;
  Matrix span;
};

// D1: d(x)d(y) - d(x.y) = d(d(x)>y + x<d(y)) - d(x)<-y - x->d(y) - f(x,y)
// D2: d(P_V x) = Q(x) + P(d x)        D3: d(theta_V x) = eta(x) + theta(d x)
// Throws InvalidInput if the datum fails R1-R17.
Report check_deformation(const DeformationMap& dm);

// V with x._d y = x._V y + d(x) > y + x < d(y), P_V and theta_V.
// Throws InvalidInput if dm fails check_deformation.
HomAlgebra build_deformed(const DeformationMap& dm);

// d = -(projection onto R along B) restricted to V; the datum is read off
// the host with the canonical retraction. Throws InvalidInput unless B is a
// subalgebra complementary to the R-block.
DeformationMap complement_to_deformation(const Complement& b);

// B = {d(x) + x}. Throws InvalidInput if dm fails check_deformation.
Complement deformation_to_complement(const DeformationMap& dm);

// DE1: delta(x.y) - delta(x).delta(y) = D(delta x) > delta y + delta x < D(delta y)
//                                       - delta(d(x) > y) - delta(x < d(y))
// DE2: delta P_V = P_V delta           DE3: delta theta_V = theta_V delta
// Also checks that delta is a morphism V_d -> V_D and throws InternalError
// if the two disagree. Throws InvalidInput for different datums or a
// singular delta.
Report check_deformation_equiv(const DeformationMap& d1, const DeformationMap& d2, const Matrix& delta);

// Polynomial in one unknown with coefficients in Q(lambda), lowest degree first.
using UPoly = std::vector<Scalar>;
std::string upoly_to_string(const UPoly& p, const std::string& var);

struct SolutionSet {
  enum class Kind { Empty, Finite, All, Irrational };
  Kind kind = Kind::Empty;
  std::vector<Scalar> roots;  // ascending for rational values, else in discovery order
  // Nonzero constraint polynomials in the unknown d, labelled by condition.
  std::vector<std::pair<std::string, UPoly>> constraints;
  UPoly common;  // monic gcd of the constraints (empty for All)

  std::string to_string() const;
};

// Base and V both one-dimensional. Throws Unsupported otherwise or when a
// constraint has degree above 2.
SolutionSet solve_deformation_1dim(const ExtendingDatum& datum);

// A nonzero delta-bar with d1 ~ d2 (one-dimensional V), if any.
std::optional<Scalar> find_equiv_witness_1dim(const DeformationMap& d1, const DeformationMap& d2);

struct IndexReport {
  SolutionSet solutions;
  size_t index = 0;
  std::vector<Scalar> representatives;
  std::vector<std::string> classes;  // one description per class

  std::string to_string() const;
};

// Throws Unsupported when the solution set is irrational or unsupported.
IndexReport count_index_1dim(const ExtendingDatum& datum);

// One-dimensional deformation map with d(x) = value * a_1.
DeformationMap deformation_1dim(const ExtendingDatum& datum, const Scalar& value);

}  // namespace rbfam
