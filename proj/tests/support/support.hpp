#pragma once
// Seeded generators and oracles shared by the unit tests and the acceptance run.

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbfam/deformation.hpp"
#include "rbfam/matched.hpp"
#include "rbfam/table2.hpp"

namespace rbfam::testing {

using Rng = std::mt19937_64;

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[rng() % xs.size()];
}

// {0, 1, -1, 2, -2, l, -l}
const std::vector<Scalar>& entry_pool();
// Mostly zero, otherwise a nonzero entry of the pool.
Scalar sparse_entry(Rng& rng, unsigned density_percent = 25);
Matrix random_invertible(Rng& rng, size_t k);

// An algebra E whose first `split` coordinates span a subalgebra.
struct Host {
  HomAlgebra algebra;
  size_t split;
};

// Valid one-dimensional algebras over the two-element semigroup.
const std::vector<HomAlgebra>& line_seeds();
// Valid two-dimensional algebras split 1 + 1.
const std::vector<Host>& plane_seeds();
// Hosts of shape n + m (n, m in {1, 2}), each with both blocks closed when
// `factorizable` is set.
std::vector<Host> hosts(size_t n, size_t m, bool factorizable);

// Renames the basis to a1..an, x1..xm.
void rename(Host& h);
// Moves the host by T = [[A, G], [0, H]] with A, H invertible. G is random
// when upper_block is set and zero otherwise, so the V-block stays closed.
Host scramble(const Host& h, Rng& rng, bool upper_block);

ExtendingDatum random_valid_datum(Rng& rng, size_t n, size_t m);
ExtendingDatum random_sparse_datum(Rng& rng, size_t n, size_t m);
// Adds a nonzero pool entry to one coordinate of one component.
ExtendingDatum perturb(const ExtendingDatum& d, Rng& rng);

using Key = std::pair<std::string, std::vector<std::string>>;
// Product-axiom keys that the R-labelled violations of a datum translate to.
std::set<Key> product_keys_of_datum_report(const Report& r);
std::set<Key> keys_of(const Report& r);

FlagDatum random_flag(Rng& rng);
// A flag datum taken from a random row of the classification table.
FlagDatum random_table2_flag(Rng& rng);

MatchedPair random_matched_pair(Rng& rng);
DeformationMap random_deformation(Rng& rng);
// A random retraction of E onto its first n coordinates.
Matrix random_retraction(Rng& rng, size_t n, size_t N);

// The row-10 datum of the classification table over line_R.
ExtendingDatum row10_datum(const Scalar& tr, const Scalar& k2);

}  // namespace rbfam::testing
