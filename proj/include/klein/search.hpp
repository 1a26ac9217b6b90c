#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "klein/lie_algebra.hpp"
#include "klein/report.hpp"

namespace klein {

struct SearchConfig {
  LieAlgebra algebra;
  std::vector<std::size_t> stab_dims;
  std::vector<Scalar> coeff_grid = {-2, -1, 0, 1, 2};
  std::size_t candidate_cap = 1'000'000;
  /// Evaluation threads; results do not depend on it.
  std::size_t workers = 1;
};

/// Throws MalformedInput: cap = 0, grid missing 0 or 1, dimension above
/// dim(g).
void validate_config(const SearchConfig& cfg);

/// Dimension-d subspaces in reduced echelon form: pivot patterns in
/// lexicographic order, free entries drawn from the (sorted, deduplicated)
/// grid with the first free entry most significant. Distinct grid values
/// give distinct echelon forms, so the stream has no duplicates.
class CandidateStream {
 public:
  explicit CandidateStream(const SearchConfig& cfg);

  /// Next candidate, or nullopt when exhausted or the cap is reached.
  std::optional<Subspace> next();
  std::size_t produced() const { return produced_; }
  /// Stopped at the cap with candidates left.
  bool truncated() const { return truncated_; }

 private:
  bool advance_pattern();
  bool start_dimension();
  Subspace build() const;

  std::size_t n_;
  std::vector<std::size_t> dims_;
  std::vector<Scalar> grid_;
  std::size_t cap_;
  std::size_t dim_index_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots_;  // (row, column)
  std::vector<std::size_t> digits_;
  bool pending_ = false;
  bool done_ = false;
  std::size_t produced_ = 0;
  bool truncated_ = false;
};

/// Collects the whole stream.
std::vector<Subspace> enumerate_candidates(const SearchConfig& cfg, bool* truncated = nullptr);

struct SearchHit {
  Subspace stabilizer;
  std::size_t order = 0;
  std::size_t nil_length = 0;              // of the stabilizer
  std::optional<std::size_t> sol_length;   // of the stabilizer, when solvable
};

/// Consistency checks run on every bracket-closed candidate.
struct SearchViolations {
  std::size_t radical_mismatch = 0;  // effectivity radical != filtration terminal
  std::size_t eq10 = 0;
  std::size_t f1_not_nilpotent = 0;
  std::size_t prop6 = 0;
  std::size_t cor7 = 0;
  std::vector<std::string> examples;  // first few, in candidate order

  std::size_t total() const { return radical_mismatch + eq10 + f1_not_nilpotent + prop6 + cor7; }
};

struct SearchResult {
  std::string algebra_name;
  std::size_t generated = 0;
  std::size_t subalgebras = 0;
  std::size_t effective = 0;
  std::size_t prop6_checked = 0;
  std::size_t cor7_checked = 0;
  bool truncated = false;
  bool algebra_nilpotent = false;
  std::size_t nil_length = 0;
  /// Sorted by (order desc, canonical basis lex).
  std::vector<SearchHit> hits;
  std::size_t max_order = 0;
  SearchViolations violations;

  std::vector<SearchHit> witnesses() const;
};

SearchResult search_max_order(const SearchConfig& cfg);

/// JSON report; lists at most `top` hits (all when top is 0). Independent
/// of cfg.workers.
std::string search_report_json(const SearchConfig& cfg, const SearchResult& result, std::size_t top);
std::string search_report_text(const SearchConfig& cfg, const SearchResult& result, std::size_t top);

}  // namespace klein
