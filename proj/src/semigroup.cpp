#include "rbfam/semigroup.hpp"

#include "rbfam/errors.hpp"

namespace rbfam {

FiniteSemigroup::FiniteSemigroup(std::string name, std::vector<std::string> elements,
                                 std::vector<std::vector<int>> table)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
  if (table_.size() != elements_.size()) throw ShapeError("semigroup table row count mismatch");
  for (const auto& row : table_) {
    if (row.size() != elements_.size()) throw ShapeError("semigroup table column count mismatch");
    for (int k : row)
      if (k != kUndefined && (k < 0 || k >= static_cast<int>(elements_.size())))
        throw ShapeError("semigroup table entry out of range");
  }
}

FiniteSemigroup FiniteSemigroup::trivial() { return FiniteSemigroup("S1", {"e"}, {{0}}); }

FiniteSemigroup FiniteSemigroup::two_element() {
  return FiniteSemigroup("S", {"e", "s"}, {{0, 1}, {1, 0}});
}

int FiniteSemigroup::index(const std::string& e) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == e) return static_cast<int>(i);
  return kUndefined;
}

Report semigroup_validate(const FiniteSemigroup& s) {
  Report rep;
  size_t n = s.size();
  bool closed = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (s.mul(i, j) == FiniteSemigroup::kUndefined) {
        closed = false;
        rep.add_detail("semigroup-closure", {s.element(i), s.element(j)}, "product undefined");
      }
  if (closed) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          int l = s.mul(s.mul(i, j), k);
          int r = s.mul(i, s.mul(j, k));
          if (l != r)
            rep.add_detail("semigroup-assoc", {s.element(i), s.element(j), s.element(k)},
                           "lhs=" + s.element(l) + " rhs=" + s.element(r));
        }
  }
  rep.sort();
  return rep;
}

}  // namespace rbfam
