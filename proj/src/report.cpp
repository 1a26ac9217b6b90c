#include "klein/report.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace klein {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Finding:
      return "finding";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "fail";
}

bool Report::has_failure() const {
  for (const auto& r : records) {
    if (r.status == Status::Fail) return true;
  }
  return false;
}

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int sign = sgn(v[i]);
    if (sign == 0) continue;
    const std::string& label = i < labels.size() ? labels[i] : fmt::format("e{}", i + 1);
    const Scalar magnitude = abs(v[i]);
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += format_scalar(magnitude) + "*";
    out += label;
  }
  return out.empty() ? "0" : out;
}

std::string format_tuple(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_scalar(v[i]);
  return out + ")";
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels) {
  if (s.is_zero()) return "0";
  std::string out = "span(";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r > 0) out += ", ";
    out += format_vector(s.basis()[r], labels);
  }
  return out + ")";
}

std::string render_text(const Report& report) {
  std::string out;
  for (const auto& r : report.records) {
    out += fmt::format("[{}] {}: {}", to_string(r.status), r.check, r.computed);
    if (!r.expected.empty()) out += fmt::format(" (expected {})", r.expected);
    if (!r.inputs.empty()) out += fmt::format(" [{}]", r.inputs);
    out += "\n";
  }
  return out;
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    records.push_back({{"check", r.check},
                       {"inputs", r.inputs},
                       {"computed", r.computed},
                       {"expected", r.expected},
                       {"status", std::string(to_string(r.status))}});
  }
  nlohmann::ordered_json doc = {{"records", records}, {"failed", report.has_failure()}};
  return doc.dump(2) + "\n";
}

}  // namespace klein
