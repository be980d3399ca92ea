#pragma once
/**
 * @file report.hpp
 * @brief Violation reports returned by every checker.
 */

#include <set>
#include <string>
#include <vector>

#include "rbfam/linalg.hpp"

namespace rbfam {

struct Violation {
  std::string label;
  std::vector<std::string> at;
  Vec lhs;
  Vec rhs;
  // Used instead of lhs/rhs when the sides are not vectors (semigroup tables).
  std::string detail;

  // "<label> @ (<indices>) lhs=<vector> rhs=<vector>"
  std::string to_string() const;
};

// Orders "R2" before "R13": digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

class Report {
 public:
  bool ok() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const std::vector<Violation>& items() const { return items_; }

  void add(std::string label, std::vector<std::string> at, Vec lhs, Vec rhs);
  void add_detail(std::string label, std::vector<std::string> at, std::string detail);
  // Records a violation only when the two sides differ.
  void expect(const std::string& label, std::vector<std::string> at, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) add(label, std::move(at), lhs, rhs);
  }
  void append(const Report& other, const std::string& prefix = "");
  // Sorted by label, then index tuple.
  void sort();

  std::set<std::string> labels() const;
  std::string to_string() const;

 private:
  std::vector<Violation> items_;
};

}  // namespace rbfam
