#include "prelie2/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace prelie2 {

void ValidationReport::add(std::string condition, std::vector<std::size_t> indices,
                           Vector difference) {
  violations_.push_back({std::move(condition), std::move(indices), std::move(difference)});
}

void ValidationReport::expect_equal(std::string_view condition, std::vector<std::size_t> indices,
                                    const Vector& lhs, const Vector& rhs) {
  Vector diff = lhs - rhs;
  if (!is_zero(diff)) add(std::string(condition), std::move(indices), std::move(diff));
}

void ValidationReport::expect_zero(std::string_view condition, std::vector<std::size_t> indices,
                                   const Vector& value) {
  if (!is_zero(value)) add(std::string(condition), std::move(indices), value);
}

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  for (const auto& v : other.violations_)
    violations_.push_back({std::string(prefix) + v.condition, v.indices, v.difference});
}

void ValidationReport::sort() {
  std::stable_sort(violations_.begin(), violations_.end(), [](const auto& a, const auto& b) {
    if (a.condition != b.condition) return a.condition < b.condition;
    return a.indices < b.indices;
  });
}

bool ValidationReport::has(std::string_view condition) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const auto& v) { return v.condition == condition; });
}

std::vector<std::string> ValidationReport::conditions() const {
  std::set<std::string> s;
  for (const auto& v : violations_) s.insert(v.condition);
  return {s.begin(), s.end()};
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations_.size() << " violation(s)";
  std::size_t shown = 0;
  for (const auto& v : violations_) {
    if (shown++ == max_lines) {
      os << "\n  ...";
      break;
    }
    os << "\n  " << v.condition << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << "): lhs-rhs = [";
    for (std::size_t i = 0; i < v.difference.size(); ++i) os << (i ? ", " : "") << v.difference[i];
    os << "]";
  }
  return os.str();
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) throw InvalidInput(what, report);
}

}  // namespace prelie2
