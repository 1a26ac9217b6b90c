#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "klein/scalar.hpp"
#include "klein/subspace.hpp"

namespace klein {

enum class Status { Pass, Fail, Finding, NotApplicable };

std::string_view to_string(Status status);

/// One line of a verification report.
struct CheckRecord {
  std::string check;
  std::string inputs;
  std::string computed;
  std::string expected;
  Status status = Status::Pass;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(std::string check, std::string inputs, std::string computed, std::string expected, Status status) {
    records.push_back({std::move(check), std::move(inputs), std::move(computed), std::move(expected), status});
  }
  void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }
  /// Findings and not-applicable records do not count as failures.
  bool has_failure() const;
};

/// "2*X - H", "e1 + 1/2*e3", "0".
std::string format_vector(const Vector& v, const std::vector<std::string>& labels);
/// "(0, 1/2)"
std::string format_tuple(const Vector& v);
/// "span(H, Y)" or "0".
std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace klein
