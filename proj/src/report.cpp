#include "rbfam/report.hpp"

#include <algorithm>
#include <cctype>

namespace rbfam {

std::string Violation::to_string() const {
  std::string s = label + " @ (";
  for (size_t i = 0; i < at.size(); ++i) {
    if (i) s += ",";
    s += at[i];
  }
  s += ")";
  if (!detail.empty()) return s + " " + detail;
  return s + " lhs=" + rbfam::to_string(lhs) + " rhs=" + rbfam::to_string(rhs);
}

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

void Report::add(std::string label, std::vector<std::string> at, Vec lhs, Vec rhs) {
  items_.push_back({std::move(label), std::move(at), std::move(lhs), std::move(rhs), {}});
}

void Report::add_detail(std::string label, std::vector<std::string> at, std::string detail) {
  items_.push_back({std::move(label), std::move(at), {}, {}, std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto v : other.items_) {
    v.label = prefix + v.label;
    items_.push_back(std::move(v));
  }
}

void Report::sort() {
  std::stable_sort(items_.begin(), items_.end(), [](const Violation& x, const Violation& y) {
    if (x.label != y.label) return natural_less(x.label, y.label);
    return std::lexicographical_compare(x.at.begin(), x.at.end(), y.at.begin(), y.at.end(),
                                        natural_less);
  });
}

std::set<std::string> Report::labels() const {
  std::set<std::string> out;
  for (const auto& v : items_) out.insert(v.label);
  return out;
}

std::string Report::to_string() const {
  std::string s;
  for (const auto& v : items_) s += v.to_string() + "\n";
  return s;
}

}  // namespace rbfam
