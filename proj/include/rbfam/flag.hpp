#pragma once
/**
 * @file flag.hpp
 * @brief Flag datums (extensions by a one-dimensional V = k{x}), the
 * conditions F1-F21, the bijection with one-dimensional extending datums and
 * finite grid enumeration.
 */

#include <string>
#include <vector>

#include "rbfam/extending.hpp"

namespace rbfam {

// l, r are functionals stored as coefficient rows: l(a_i) = l[i].
// t_r, t_l act as matrices on R; column i is the image of a_i.
struct FlagDatum {
  HomAlgebra base;
  Vec l, r;
  Matrix t_r, t_l;
  Vec a1;
  Scalar k1;
  std::vector<Vec> b;         // indexed by semigroup element
  std::vector<Scalar> kfam;   // indexed by semigroup element
  Vec a2;
  Scalar k2;

  void validate_shape() const;
  static FlagDatum zero(HomAlgebra base);
};

bool operator==(const FlagDatum& a, const FlagDatum& b);

Report check_flag(const FlagDatum& fd);

// vname names the basis vector of V.
ExtendingDatum flag_to_datum(const FlagDatum& fd, const std::string& vname = "x");
FlagDatum datum_to_flag(const ExtendingDatum& d);

// Candidate values per field. t_r and t_l candidates are n x n matrices.
struct FlagGrid {
  std::vector<Vec> l, r;
  std::vector<Matrix> t_r, t_l;
  std::vector<Vec> a1;
  std::vector<Scalar> k1;
  std::vector<std::vector<Vec>> b;        // b[w] candidates
  std::vector<std::vector<Scalar>> kfam;  // kfam[w] candidates
  std::vector<Vec> a2;
  std::vector<Scalar> k2;

  // Number of grid points (0 if any field has no candidates).
  size_t size() const;
};

inline constexpr size_t kMaxGridPoints = 1000000;

// Passing grid points in lexicographic order over the fields
// l, r, t_r, t_l, a1, k1, b[w]..., kfam[w]..., a2, k2 (first field slowest).
// Throws ResourceError above kMaxGridPoints.
std::vector<FlagDatum> enumerate_flags(const HomAlgebra& base, const FlagGrid& grid);

}  // namespace rbfam
