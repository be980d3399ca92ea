#pragma once
/**
 * @file matched.hpp
 * @brief Matched pairs (M1-M8), bicrossed products and factorization.
 */

#include <array>
#include <optional>
#include <vector>

#include "rbfam/extending.hpp"
#include "rbfam/flag.hpp"

namespace rbfam {

struct MatchedPair {
  HomAlgebra R, V;
  Bilinear tri_l;   // R x V -> V
  Bilinear tri_r;   // V x R -> V
  Bilinear harp_r;  // V x R -> R
  Bilinear harp_l;  // R x V -> R

  void validate_shape() const;
  static MatchedPair zero(HomAlgebra r, HomAlgebra v);
};

bool operator==(const MatchedPair& a, const MatchedPair& b);

// Throws InvalidInput if R or V is not a valid algebra or they disagree on
// semigroup or weight.
Report check_matched_pair(const MatchedPair& mp);

// The extending datum with f = 0, Q = 0, eta = 0 and V's own structure.
ExtendingDatum zero_extension(const MatchedPair& mp);
// Inverse of zero_extension; throws InvalidInput if f, Q or eta is nonzero.
MatchedPair pair_of(const ExtendingDatum& d);

// Throws InvalidInput if the pair fails M1-M8.
HomAlgebra build_bicrossed(const MatchedPair& mp);

struct Factorization {
  Report report;
  std::optional<MatchedPair> pair;
};

// r_span (N x n) and v_span (N x m) must together form a basis of E.
// The recovered pair uses the span vectors as bases of R and V.
Factorization check_factorization(const HomAlgebra& e, const Matrix& r_span, const Matrix& v_span);

// The published rows (l, r, t_r, t_l) of matched pairs between line_R and
// line_B, in the order they are printed there.
const std::vector<std::array<int, 4>>& table3_published();

// Grid with l, r, t_r, t_l in {0, 1}, a1 = b = a2 = 0, k = -lambda,
// k1 = k2 = 1 over line_R.
FlagGrid table3_grid();

struct Table3Result {
  std::vector<FlagDatum> found;             // grid order
  std::vector<std::array<int, 4>> rows;     // published order when matched
  bool matches = false;
};

Table3Result reproduce_table3();

}  // namespace rbfam
