#pragma once
/**
 * @file table2.hpp
 * @brief The published classification of flag datums over line_R, entered
 * as row specifications with parameters, constraints and witnesses.
 *
 * Over a one-dimensional base every flag datum is a tuple of scalars
 * (l, r, t_r, t_l, a1, k1, (b_e, b_s), (k_e, k_s), a2, k2).
 */

#include <array>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rbfam/flag.hpp"

namespace rbfam {

struct FlagTuple {
  Scalar l, r, t_r, t_l, a1, k1;
  std::array<Scalar, 2> b, k;
  Scalar a2, k2;
};

bool operator==(const FlagTuple& a, const FlagTuple& b);
// "(l, r, t_r, t_l, a1, k1, (b_e, b_s), (k_e, k_s), a2, k2)"
std::string to_string(const FlagTuple& t);

// Requires a one-dimensional base over a two-element semigroup.
FlagDatum flag_from_tuple(const HomAlgebra& base, const FlagTuple& t);
FlagTuple tuple_of(const FlagDatum& fd);

using Params = std::map<std::string, Scalar>;

struct RowWitness {
  Scalar h, g;
  FlagTuple cls;  // class representative; the witness maps it to the row
};

struct Exclusion {
  std::string param;
  std::vector<Scalar> values;
};

struct FlagRowSpec {
  std::string id;
  std::vector<std::string> params;
  std::vector<Exclusion> constraints;
  std::string note;
  std::function<FlagTuple(const Params&)> flag;
  std::function<std::vector<RowWitness>(const Params&)> witnesses;

  std::string constraint_text() const;
};

// Rows 1..20 with 3 and 5 split into 3a/3b and 5a/5b: 22 entries.
const std::vector<FlagRowSpec>& table2_rows();
// Throws InvalidInput for an unknown id.
const FlagRowSpec& table2_row(const std::string& id);

// Throws InvalidInput for missing, unknown or excluded parameter values.
void check_params(const FlagRowSpec& spec, const Params& p);

// Values drawn from {1,-1,2,-2,3,-3,5,-5,1/2,1/3} avoiding exclusions.
Params random_params(const FlagRowSpec& spec, std::mt19937_64& rng);

struct RowResult {
  Report report;
  size_t witnesses = 0;
  std::string note;
};

// The instantiated row must pass F1-F21, and every witness (g, h) must pass
// E1-E7 from its class representative to the row over line_R.
RowResult verify_table2_row(const FlagRowSpec& spec, const Params& p);

}  // namespace rbfam
