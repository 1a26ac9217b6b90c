#include "klein/search.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <thread>

#include "klein/checks.hpp"
#include "klein/errors.hpp"
#include "klein/filtration.hpp"
#include "klein/io.hpp"
#include "klein/series.hpp"

namespace klein {

void validate_config(const SearchConfig& cfg) {
  if (cfg.candidate_cap == 0) throw MalformedInput("search: candidate cap must be positive");
  if (cfg.stab_dims.empty()) throw MalformedInput("search: no stabilizer dimensions given");
  const auto has = [&](long v) {
    return std::any_of(cfg.coeff_grid.begin(), cfg.coeff_grid.end(), [&](const Scalar& s) { return s == v; });
  };
  if (!has(0) || !has(1)) throw MalformedInput("search: coefficient grid must contain 0 and 1");
  for (auto d : cfg.stab_dims) {
    if (d > cfg.algebra.dim()) {
      throw MalformedInput(fmt::format("search: stabilizer dimension {} exceeds dim(g) = {}", d, cfg.algebra.dim()));
    }
  }
  if (cfg.workers == 0) throw MalformedInput("search: workers must be positive");
}

CandidateStream::CandidateStream(const SearchConfig& cfg)
    : n_(cfg.algebra.dim()), dims_(cfg.stab_dims), grid_(cfg.coeff_grid), cap_(cfg.candidate_cap) {
  validate_config(cfg);
  std::sort(dims_.begin(), dims_.end());
  dims_.erase(std::unique(dims_.begin(), dims_.end()), dims_.end());
  std::sort(grid_.begin(), grid_.end());
  grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
  done_ = dims_.empty() || !start_dimension();
}

bool CandidateStream::start_dimension() {
  const std::size_t d = dims_[dim_index_];
  pivots_.resize(d);
  for (std::size_t i = 0; i < d; ++i) pivots_[i] = i;
  free_slots_.clear();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_slots_.emplace_back(r, c);
    }
  }
  digits_.assign(free_slots_.size(), 0);
  return true;
}

bool CandidateStream::advance_pattern() {
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < grid_.size()) return true;
    digits_[i] = 0;
  }
  const std::size_t d = pivots_.size();
  for (std::size_t i = d; i-- > 0;) {
    if (pivots_[i] < n_ - d + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < d; ++j) pivots_[j] = pivots_[j - 1] + 1;
      free_slots_.clear();
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
          if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_slots_.emplace_back(r, c);
        }
      }
      digits_.assign(free_slots_.size(), 0);
      return true;
    }
  }
  if (++dim_index_ < dims_.size()) return start_dimension();
  return false;
}

Subspace CandidateStream::build() const {
  Rows rows(pivots_.size(), Vector(n_));
  for (std::size_t r = 0; r < pivots_.size(); ++r) rows[r][pivots_[r]] = 1;
  for (std::size_t s = 0; s < free_slots_.size(); ++s) {
    rows[free_slots_[s].first][free_slots_[s].second] = grid_[digits_[s]];
  }
  return Subspace::span(rows, n_);
}

std::optional<Subspace> CandidateStream::next() {
  if (done_) return std::nullopt;
  if (produced_ >= cap_) {
    truncated_ = true;
    return std::nullopt;
  }
  auto s = build();
  ++produced_;
  if (!advance_pattern()) done_ = true;
  return s;
}

std::vector<Subspace> enumerate_candidates(const SearchConfig& cfg, bool* truncated) {
  CandidateStream stream(cfg);
  std::vector<Subspace> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  if (truncated) *truncated = stream.truncated();
  return out;
}

std::vector<SearchHit> SearchResult::witnesses() const {
  std::vector<SearchHit> out;
  for (const auto& h : hits) {
    if (h.order == max_order) out.push_back(h);
  }
  return out;
}

namespace {

struct AlgebraFacts {
  bool nilpotent = false;
  std::size_t nil_length = 0;
  SeriesChain lower;
};

struct Outcome {
  bool subalgebra = false;
  std::optional<SearchHit> hit;
  bool prop6_checked = false;
  bool cor7_checked = false;
  SearchViolations violations;
};

void note(SearchViolations& v, std::size_t& counter, std::string message) {
  ++counter;
  v.examples.push_back(std::move(message));
}

Outcome evaluate(const LieAlgebra& alg, const AlgebraFacts& facts, const Subspace& candidate) {
  Outcome out;
  if (!is_subalgebra(candidate, alg)) return out;
  out.subalgebra = true;
  const KleinPair pair(alg, candidate);
  const auto f = weisfeiler_filtration(pair);
  const auto label = [&] { return format_subspace(candidate, alg.labels()); };
  if (effectivity_radical(pair) != f.terminal()) {
    note(out.violations, out.violations.radical_mismatch, "radical mismatch at " + label());
  }
  const auto eq10 = verify_eq10(pair, f);
  if (!eq10.violations.empty()) note(out.violations, out.violations.eq10, "eq10 violated at " + label());
  if (eq10.f1_applicable && !eq10.f1_nilpotent) note(out.violations, out.violations.f1_not_nilpotent, "F_1 not nilpotent at " + label());
  if (!f.terminal().is_zero()) return out;

  SearchHit hit;
  hit.stabilizer = candidate;
  hit.order = f.stabilization_index;
  const auto lower = lower_central_series(candidate, alg);
  const auto derived = derived_series(candidate, alg);
  hit.nil_length = lower.length;
  if (derived.terminal().is_zero()) hit.sol_length = derived.length;

  if (hit.order >= 1) {
    out.prop6_checked = true;
    if (span_intersect(candidate, facts.lower.term(hit.order - 1)).is_zero()) {
      note(out.violations, out.violations.prop6, "prop6 violated at " + label());
    }
  }
  if (facts.nilpotent) {
    out.cor7_checked = true;
    if (hit.order > facts.nil_length + 1) note(out.violations, out.violations.cor7, "cor7 violated at " + label());
  }
  out.hit = std::move(hit);
  return out;
}

constexpr std::size_t kBatch = 2048;
constexpr std::size_t kMaxExamples = 20;

}  // namespace

SearchResult search_max_order(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto& alg = cfg.algebra;
  AlgebraFacts facts;
  facts.lower = lower_central_series(alg);
  facts.nilpotent = facts.lower.terminal().is_zero();
  facts.nil_length = facts.lower.length;

  SearchResult result;
  result.algebra_name = alg.name();
  result.algebra_nilpotent = facts.nilpotent;
  result.nil_length = facts.nil_length;

  CandidateStream stream(cfg);
  std::vector<Subspace> batch;
  std::vector<Outcome> outcomes;
  for (;;) {
    batch.clear();
    while (batch.size() < kBatch) {
      auto s = stream.next();
      if (!s) break;
      batch.push_back(std::move(*s));
    }
    if (batch.empty()) break;
    outcomes.assign(batch.size(), Outcome{});
    const std::size_t workers = std::min(cfg.workers, batch.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = evaluate(alg, facts, batch[i]);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += workers) outcomes[i] = evaluate(alg, facts, batch[i]);
        });
      }
    }
    // Merge in candidate order so counts and examples are schedule-independent.
    for (auto& o : outcomes) {
      ++result.generated;
      if (!o.subalgebra) continue;
      ++result.subalgebras;
      auto& v = result.violations;
      v.radical_mismatch += o.violations.radical_mismatch;
      v.eq10 += o.violations.eq10;
      v.f1_not_nilpotent += o.violations.f1_not_nilpotent;
      v.prop6 += o.violations.prop6;
      v.cor7 += o.violations.cor7;
      for (auto& e : o.violations.examples) {
        if (v.examples.size() < kMaxExamples) v.examples.push_back(std::move(e));
      }
      result.prop6_checked += o.prop6_checked;
      result.cor7_checked += o.cor7_checked;
      if (o.hit) {
        ++result.effective;
        result.hits.push_back(std::move(*o.hit));
      }
    }
  }
  result.truncated = stream.truncated();
  std::sort(result.hits.begin(), result.hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.stabilizer < b.stabilizer;
  });
  result.max_order = result.hits.empty() ? 0 : result.hits.front().order;
  return result;
}

namespace {

Json hit_to_json(const SearchHit& h, const LieAlgebra& alg) {
  Json j{{"stabilizer", subspace_to_json(h.stabilizer)},
         {"text", format_subspace(h.stabilizer, alg.labels())},
         {"dim", h.stabilizer.dim()},
         {"order", h.order},
         {"nil_length", h.nil_length}};
  j["sol_length"] = h.sol_length ? Json(*h.sol_length) : Json(nullptr);
  return j;
}

}  // namespace

std::string search_report_json(const SearchConfig& cfg, const SearchResult& result, std::size_t top) {
  const auto& alg = cfg.algebra;
  auto dims = cfg.stab_dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  auto grid = cfg.coeff_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Json grid_json = Json::array();
  for (const auto& g : grid) grid_json.push_back(scalar_to_json(g));

  const auto limit = [&](std::size_t size) { return top == 0 ? size : std::min(size, top); };
  const auto witnesses = result.witnesses();
  Json witness_json = Json::array();
  for (std::size_t i = 0; i < limit(witnesses.size()); ++i) witness_json.push_back(hit_to_json(witnesses[i], alg));
  Json hits_json = Json::array();
  for (std::size_t i = 0; i < limit(result.hits.size()); ++i) hits_json.push_back(hit_to_json(result.hits[i], alg));

  const auto& v = result.violations;
  Json doc{{"algebra", alg.name()},
           {"dim", alg.dim()},
           {"stab_dims", dims},
           {"grid", grid_json},
           {"cap", cfg.candidate_cap},
           {"counts",
            {{"generated", result.generated}, {"subalgebras", result.subalgebras}, {"effective", result.effective}}},
           {"truncated", result.truncated},
           {"algebra_nilpotent", result.algebra_nilpotent},
           {"nil_length", result.nil_length},
           {"max_order", result.max_order},
           {"witness_count", witnesses.size()},
           {"witnesses", witness_json},
           {"checks",
            {{"prop6_checked", result.prop6_checked},
             {"cor7_checked", result.cor7_checked},
             {"radical_mismatch", v.radical_mismatch},
             {"eq10", v.eq10},
             {"f1_not_nilpotent", v.f1_not_nilpotent},
             {"prop6", v.prop6},
             {"cor7", v.cor7},
             {"examples", v.examples}}},
           {"hits_listed", hits_json.size()},
           {"hits", hits_json}};
  return doc.dump(2) + "\n";
}

std::string search_report_text(const SearchConfig& cfg, const SearchResult& result, std::size_t top) {
  const auto& alg = cfg.algebra;
  std::string out;
  out += fmt::format("algebra {} (dim {}), nilpotent: {}, nil-length {}\n", alg.name(), alg.dim(),
                     result.algebra_nilpotent ? "yes" : "no", result.nil_length);
  out += fmt::format("candidates {}{}, subalgebras {}, effective {}\n", result.generated,
                     result.truncated ? " (truncated at cap)" : "", result.subalgebras, result.effective);
  out += fmt::format("max order {} ({} witnesses)\n", result.max_order, result.witnesses().size());
  const auto& v = result.violations;
  out += fmt::format("checks: prop6 {} checked, cor7 {} checked; violations: radical {}, eq10 {}, F_1 {}, "
                     "prop6 {}, cor7 {}\n",
                     result.prop6_checked, result.cor7_checked, v.radical_mismatch, v.eq10, v.f1_not_nilpotent,
                     v.prop6, v.cor7);
  for (const auto& e : v.examples) out += "  " + e + "\n";
  const std::size_t shown = top == 0 ? result.hits.size() : std::min(top, result.hits.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& h = result.hits[i];
    out += fmt::format("  order {}  {}  nil {}  sol {}\n", h.order, format_subspace(h.stabilizer, alg.labels()),
                       h.nil_length, h.sol_length ? std::to_string(*h.sol_length) : "-");
  }
  return out;
}

}  // namespace klein
