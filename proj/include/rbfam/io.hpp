#pragma once
/**
 * @file io.hpp
 * @brief Line-oriented text format for semigroups, algebras, extending
 * datums, flag datums, matched pairs, deformation maps, classification-table
 * rows and flag grids.
 *
 * A document is a sequence of blocks and import statements:
 *
 *   import "other.alg"
 *   semigroup S { elements: e, s ; table: e*s = s ; ... }
 *   algebra E over QL weight l uses S { dim: 2 ; basis: e1, e2 ; mul: e1*e1 = 1 e1 ; ... }
 *   datum D base E { vdim: 1 ; vbasis: x ; tri_l: e1|x -> 2 x ; ... }
 *
 * Statements end at a newline or ';'. Unlisted entries are zero. References
 * may point forward and into imported files.
 */

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rbfam/deformation.hpp"
#include "rbfam/matched.hpp"
#include "rbfam/table2.hpp"

namespace rbfam {

struct Document;

struct ImportBlock {
  std::string path;
  std::shared_ptr<const Document> doc;
};

struct FlagBlock {
  std::string name;
  FlagDatum flag;
};

struct PairBlock {
  std::string name;
  MatchedPair pair;
};

struct DeformationBlock {
  std::string name;
  DeformationMap map;  // map.datum.name is the referenced block
};

// A row of the classification table over a one-dimensional base; params
// may be incomplete until supplied on the command line.
struct FlagRowBlock {
  std::string name;
  HomAlgebra base;
  std::string row;
  Params params;
  // Throws InvalidInput for missing or excluded parameters.
  ExtendingDatum datum() const;
  FlagDatum flag() const;
};

struct GridBlock {
  std::string name;
  HomAlgebra base;
  FlagGrid grid;
};

using Block = std::variant<ImportBlock, FiniteSemigroup, HomAlgebra, ExtendingDatum, FlagBlock, PairBlock,
                           DeformationBlock, FlagRowBlock, GridBlock>;

std::string block_kind(const Block& b);
// Empty for imports.
std::string block_name(const Block& b);

struct Document {
  std::vector<Block> blocks;

  // Searches this document, then imports in order.
  const Block* find(const std::string& name) const;
};

// Names and values must agree; imports compare by path.
bool operator==(const Document& a, const Document& b);
bool operator==(const FlagGrid& a, const FlagGrid& b);

// Imports are read relative to base_dir. Throws ParseError.
Document parse_document(std::string_view text, const std::string& base_dir = ".");
Document parse_file(const std::string& path);
std::string serialize(const Document& doc);

// Coefficient-then-name linear combination in canonical form, "0" if zero.
std::string format_combination(const Vec& v, const std::vector<std::string>& names);

}  // namespace rbfam
