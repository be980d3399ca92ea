#pragma once
/**
 * @file extending.hpp
 * @brief Extending datums of R through V, unified products, the conditions
 * R1-R17, conversions between extensions and datums, and equivalence witnesses.
 */

#include <optional>
#include <string>
#include <vector>

#include "rbfam/algebra.hpp"

namespace rbfam {

// Tensor conventions (n = dim R, m = dim V):
//   tri_l  a > x   n x m -> m      tri_r  x < a   m x n -> m
//   harp_r x -> a  m x n -> n      harp_l a <- x  n x m -> n
//   f      V x V -> R              mul_V  V x V -> V
//   Q[w], eta : n x m matrices     P_V[w], theta_V : m x m matrices
struct ExtendingDatum {
  std::string name;
  HomAlgebra base;
  std::vector<std::string> vbasis;
  Bilinear tri_l, tri_r, harp_r, harp_l, f, mul_V;
  std::vector<Matrix> Q, P_V;
  Matrix eta, theta_V;

  size_t vdim() const { return vbasis.size(); }
  void validate_shape() const;

  static ExtendingDatum zero(HomAlgebra base, std::vector<std::string> vbasis, std::string name = "");
};

// Ignores the datum's own name.
bool operator==(const ExtendingDatum& a, const ExtendingDatum& b);

struct UnifiedProduct {
  HomAlgebra algebra;
  size_t split = 0;
};

// Assembles the product blockwise without validating anything.
UnifiedProduct build_unified_product(const ExtendingDatum& d);

// R1-R17 on all basis tuples. Throws InvalidInput if the base is not valid.
Report check_extending_structure(const ExtendingDatum& d);

// (V, P_V, theta_V, tri_l, tri_r) as a bimodule over the base.
Bimodule bimodule_of(const ExtendingDatum& d);

// All cross maps zero; (mul_V, P_V, theta_V) taken from b.
ExtendingDatum direct_sum_datum(const HomAlgebra& r, const HomAlgebra& b, std::string name = "");

// Extension to datum. rho : E -> R is n x N; r_span (N x n) embeds R, by
// default as the first n basis vectors of E. V is the kernel of rho with the
// basis produced by kernel().
ExtendingDatum extension_to_datum(const HomAlgebra& e, const Matrix& rho,
                                  const std::optional<Matrix>& r_span = std::nullopt);

// Datum to extension; throws InvalidInput if the datum fails R1-R17.
HomAlgebra datum_to_extension(const ExtendingDatum& d);

// Projection onto the first n coordinates of an (n+m)-dimensional space.
Matrix canonical_retraction(size_t n, size_t m);

struct EquivWitness {
  Matrix g;  // n x m, V -> R
  Matrix h;  // m x m, V -> V
};

struct EquivResult {
  Report report;
  bool cohomologous = false;
};

// E1-E7 for phi(a,x) = (a + g(x), h(x)) from the product of d1 to that of d2.
// Also runs the morphism test on the two unified products and throws
// InternalError if the two routes disagree.
EquivResult check_datum_equivalence(const ExtendingDatum& d1, const ExtendingDatum& d2,
                                    const EquivWitness& w);

// The block matrix [[I, g], [0, h]].
Matrix witness_map(const EquivWitness& w, size_t n);

// w1 : d1 ~ d2 and w2 : d2 ~ d3 give d1 ~ d3.
EquivWitness compose(const EquivWitness& w1, const EquivWitness& w2);

}  // namespace rbfam
