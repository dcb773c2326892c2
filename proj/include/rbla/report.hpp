#ifndef RBLA_REPORT_HPP
#define RBLA_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbla/linalg.hpp"

namespace rbla {

/// One violated condition: which identity, at which basis tuple, and the
/// two exact values that failed to agree. Enough to reproduce by hand.
struct ConditionFailure {
  std::string condition;
  std::vector<std::size_t> indices;
  Vec lhs;
  Vec rhs;
};

/// Result of an exhaustive basis-level check. Passing = no failures.
/// By default only the first failing basis tuple per condition is kept;
/// exhaustive mode records them all.
class ConditionReport {
public:
  explicit ConditionReport(bool exhaustive = false) : exhaustive_(exhaustive) {}

  bool passed() const { return failures_.empty(); }
  const std::vector<ConditionFailure>& failures() const { return failures_; }

  bool has(std::string_view condition) const {
    for (const auto& f : failures_)
      if (f.condition == condition) return true;
    return false;
  }

  void record(std::string condition, std::vector<std::size_t> indices, Vec lhs, Vec rhs) {
    if (!exhaustive_ && has(condition)) return;
    failures_.push_back({std::move(condition), std::move(indices), std::move(lhs), std::move(rhs)});
  }

  /// Record lhs = rhs as a failure unless it holds exactly.
  void expect_eq(const Vec& lhs, const Vec& rhs, std::string_view condition,
                 std::initializer_list<std::size_t> indices) {
    if (lhs == rhs) return;
    record(std::string(condition), std::vector<std::size_t>(indices), lhs, rhs);
  }

  void expect_zero(const Vec& lhs, std::string_view condition,
                   std::initializer_list<std::size_t> indices) {
    expect_eq(lhs, zero_vec(lhs.size()), condition, indices);
  }

  void merge(const ConditionReport& other) {
    for (const auto& f : other.failures_) {
      if (!exhaustive_ && has(f.condition)) continue;
      failures_.push_back(f);
    }
  }

  bool exhaustive() const { return exhaustive_; }

private:
  bool exhaustive_;
  std::vector<ConditionFailure> failures_;
};

} // namespace rbla

#endif
