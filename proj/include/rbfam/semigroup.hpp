#pragma once
/**
 * @file semigroup.hpp
 * @brief Finite semigroups given by an exhaustive multiplication table.
 */

#include <string>
#include <vector>

#include "rbfam/report.hpp"

namespace rbfam {

class FiniteSemigroup {
 public:
  static constexpr int kUndefined = -1;

  FiniteSemigroup() = default;
  // table[i][j] is the index of elements[i]*elements[j], or kUndefined.
  FiniteSemigroup(std::string name, std::vector<std::string> elements,
                  std::vector<std::vector<int>> table);

  // {e} with e*e = e.
  static FiniteSemigroup trivial();
  // {e, s} with e the unit and s*s = e.
  static FiniteSemigroup two_element();

  const std::string& name() const { return name_; }
  size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(size_t i) const { return elements_[i]; }
  int index(const std::string& e) const;
  int mul(size_t i, size_t j) const { return table_[i][j]; }

  // Structural equality; the semigroup's own name is ignored.
  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.elements_ == b.elements_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
};

Report semigroup_validate(const FiniteSemigroup& s);

}  // namespace rbfam
