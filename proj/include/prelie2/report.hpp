#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prelie2/tensor.hpp"

namespace prelie2 {

struct Violation {
  std::string condition;              // e.g. "(b1)", "skew(l3)"
  std::vector<std::size_t> indices;   // basis indices of the witness tuple
  Vector difference;                  // lhs − rhs

  friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string condition, std::vector<std::size_t> indices, Vector difference);
  // Records lhs − rhs under `condition` when it is nonzero.
  void expect_equal(std::string_view condition, std::vector<std::size_t> indices, const Vector& lhs,
                    const Vector& rhs);
  void expect_zero(std::string_view condition, std::vector<std::size_t> indices,
                   const Vector& value);
  // Appends another report; labels get `prefix` prepended.
  void merge(const ValidationReport& other, std::string_view prefix = {});
  // Lexicographic by (condition, indices); validators return sorted reports.
  void sort();

  bool has(std::string_view condition) const;
  std::vector<std::string> conditions() const;  // distinct labels, sorted
  std::string summary(std::size_t max_lines = 20) const;

 private:
  std::vector<Violation> violations_;
};

// Thrown when an operation's input fails validation; carries the report.
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(const std::string& what, ValidationReport report)
      : std::invalid_argument(what + "\n" + report.summary(5)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Throws InvalidInput if the report is not ok.
void require_valid(const ValidationReport& report, const std::string& what);

// Runs independent condition families, possibly on several threads, and
// merges their reports in family order before sorting. The worker count is
// capped by PRELIE2_THREADS (default: hardware concurrency).
using CheckFamily = std::function<void(ValidationReport&)>;
ValidationReport run_families(const std::vector<CheckFamily>& families);
std::size_t worker_limit();

}  // namespace prelie2
