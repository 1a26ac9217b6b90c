#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "klein/catalog.hpp"
#include "klein/checks.hpp"
#include "klein/errors.hpp"
#include "klein/filtration.hpp"
#include "klein/search.hpp"
#include "klein/series.hpp"

using namespace klein;
using namespace klein::test;

namespace {

SearchConfig config(const LieAlgebra& alg, std::vector<std::size_t> dims, std::vector<Scalar> grid = {-2, -1, 0, 1, 2}) {
  SearchConfig cfg;
  cfg.algebra = alg;
  cfg.stab_dims = std::move(dims);
  cfg.coeff_grid = std::move(grid);
  return cfg;
}

}  // namespace

TEST_CASE("candidate enumeration counts echelon patterns") {
  // Lines in Q^2 with grid {-1,0,1}: (1,c) for 3 values of c, plus (0,1).
  const auto cfg = config(catalog_algebra("abelian", {2}), {1}, {-1, 0, 1});
  CHECK(enumerate_candidates(cfg).size() == 4);
  // Planes in Q^3 with grid of size 3: 9 + 3 + 3 + 1 free-slot patterns = 3^2 + 3 + 1.
  const auto cfg3 = config(catalog_algebra("abelian", {3}), {2}, {-1, 0, 1});
  CHECK(enumerate_candidates(cfg3).size() == 13);
  const auto whole = config(catalog_algebra("abelian", {3}), {0, 3});
  CHECK(enumerate_candidates(whole).size() == 2);
}

TEST_CASE("candidates are canonical, distinct and of the requested dimensions") {
  const auto cfg = config(catalog_algebra("filiform", {4}), {1, 2});
  const auto cands = enumerate_candidates(cfg);
  std::set<Subspace> seen;
  for (const auto& s : cands) {
    CHECK((s.dim() == 1 || s.dim() == 2));
    CHECK(Subspace::span(s.basis(), 4) == s);
    CHECK(seen.insert(s).second);
  }
  // Grid values with duplicates must not create duplicates.
  const auto dup = config(catalog_algebra("filiform", {4}), {1, 2}, {1, -2, 1, 0, 2, -1, -1});
  CHECK(enumerate_candidates(dup).size() == cands.size());
}

TEST_CASE("the cap truncates and says so") {
  auto cfg = config(catalog_algebra("filiform", {5}), {2});
  cfg.candidate_cap = 10;
  bool truncated = false;
  CHECK(enumerate_candidates(cfg, &truncated).size() == 10);
  CHECK(truncated);
  const auto result = search_max_order(cfg);
  CHECK(result.truncated);
  CHECK(result.generated == 10);
  CHECK(search_report_text(cfg, result, 5).find("truncated") != std::string::npos);
}

TEST_CASE("bad configurations are rejected") {
  CHECK_THROWS_AS(validate_config(config(catalog_algebra("sl2"), {4})), MalformedInput);
  CHECK_THROWS_AS(validate_config(config(catalog_algebra("sl2"), {})), MalformedInput);
  CHECK_THROWS_AS(validate_config(config(catalog_algebra("sl2"), {1}, {})), MalformedInput);
  auto cfg = config(catalog_algebra("sl2"), {1});
  cfg.workers = 0;
  CHECK_THROWS_AS(validate_config(cfg), MalformedInput);
}

TEST_CASE("search on sl2 rediscovers the Borel pair") {
  const auto cfg = config(catalog_algebra("sl2"), {1, 2});
  const auto result = search_max_order(cfg);
  CHECK(result.max_order == 2);
  CHECK(result.violations.total() == 0);
  const auto w = result.witnesses();
  REQUIRE_FALSE(w.empty());
  for (const auto& hit : w) {
    CHECK(hit.stabilizer.dim() == 2);
    CHECK(hit.order == 2);
    // Borel type: solvable, non-abelian, two-dimensional.
    CHECK(hit.sol_length == 2u);
  }
  CHECK(std::find_if(w.begin(), w.end(), [](const SearchHit& h) { return h.stabilizer == units(3, {1, 2}); }) !=
        w.end());
}

TEST_CASE("every hit re-verifies and hits are sorted") {
  for (const auto& alg : {catalog_algebra("heisenberg", {3}), catalog_algebra("filiform", {4}),
                          catalog_algebra("sa2")}) {
    const auto cfg = config(alg, {1, 2}, {-1, 0, 1});
    const auto result = search_max_order(cfg);
    CAPTURE(alg.name());
    CHECK(result.violations.total() == 0);
    CHECK(result.hits.size() == result.effective);
    for (std::size_t i = 0; i < result.hits.size(); ++i) {
      const auto& h = result.hits[i];
      CHECK(is_subalgebra(h.stabilizer, alg));
      const KleinPair pair(alg, h.stabilizer);
      CHECK(is_effective(pair));
      CHECK(order(pair) == h.order);
      CHECK(lower_central_series(h.stabilizer, alg).length == h.nil_length);
      if (i > 0) {
        const auto& p = result.hits[i - 1];
        CHECK((p.order > h.order || (p.order == h.order && !(h.stabilizer < p.stabilizer))));
      }
    }
    if (!result.hits.empty()) CHECK(result.max_order == result.hits.front().order);
  }
}

TEST_CASE("counts cross-check against a direct scan") {
  const auto alg = catalog_algebra("heisenberg", {3});
  const auto cfg = config(alg, {1, 2});
  const auto result = search_max_order(cfg);
  std::size_t subalgebras = 0, effective = 0;
  for (const auto& s : enumerate_candidates(cfg)) {
    if (!is_subalgebra(s, alg)) continue;
    ++subalgebras;
    if (is_effective(KleinPair(alg, s))) ++effective;
  }
  CHECK(result.subalgebras == subalgebras);
  CHECK(result.effective == effective);
  CHECK(result.max_order == 1);
}

TEST_CASE("reports are identical for any worker count") {
  auto cfg = config(catalog_algebra("filiform", {5}), {1, 2}, {-1, 0, 1});
  const auto one = search_max_order(cfg);
  for (std::size_t workers : {2u, 3u, 8u}) {
    cfg.workers = workers;
    const auto many = search_max_order(cfg);
    CHECK(search_report_json(cfg, many, 0) == search_report_json(cfg, one, 0));
    CHECK(search_report_text(cfg, many, 10) == search_report_text(cfg, one, 10));
  }
}
