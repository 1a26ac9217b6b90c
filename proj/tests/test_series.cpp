#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "klein/catalog.hpp"
#include "klein/series.hpp"
#include "oracles.hpp"

using namespace klein;
using namespace klein::test;

TEST_CASE("lower central series on hand examples") {
  const auto h3 = lower_central_series(catalog_algebra("heisenberg", {3}));
  CHECK(h3.terms == std::vector<Subspace>{Subspace::whole(3), units(3, {2}), Subspace::zero(3)});
  CHECK(h3.length == 2);

  const auto l4 = lower_central_series(catalog_algebra("filiform", {4}));
  CHECK(l4.terms ==
        std::vector<Subspace>{Subspace::whole(4), units(4, {2, 3}), units(4, {3}), Subspace::zero(4)});
  CHECK(l4.length == 3);

  const auto sl2 = lower_central_series(catalog_algebra("sl2"));
  CHECK(sl2.terms == std::vector<Subspace>{Subspace::whole(3)});
  CHECK(sl2.length == 0);
  CHECK(sl2.terminal().is_whole());

  const auto ab = lower_central_series(catalog_algebra("abelian", {0}));
  CHECK(ab.length == 0);
}

TEST_CASE("derived series on hand examples") {
  const auto aff = derived_series(catalog_algebra("aff1"));
  CHECK(aff.terms == std::vector<Subspace>{Subspace::whole(2), units(2, {1}), Subspace::zero(2)});
  CHECK(aff.length == 2);
  // sa2: [g,g] = g, so the series stabilizes immediately.
  CHECK(derived_series(catalog_algebra("sa2")).length == 0);
  // Series of a subalgebra: the Borel of sl2 is solvable of length 2.
  const auto borel = derived_series(units(3, {1, 2}), catalog_algebra("sl2"));
  CHECK(borel.terms == std::vector<Subspace>{units(3, {1, 2}), units(3, {2}), Subspace::zero(3)});
}

TEST_CASE("series terms are descending and ideals") {
  for (const auto& key : {"filiform", "heisenberg", "strictly_upper", "sa2", "aff1"}) {
    const auto alg = catalog_algebra(key);
    for (const auto& chain : {lower_central_series(alg), derived_series(alg)}) {
      CHECK(chain.terms.size() == chain.length + 1);
      for (std::size_t k = 0; k + 1 < chain.terms.size(); ++k) {
        CHECK(chain.terms[k].contains(chain.terms[k + 1]));
        CHECK(chain.terms[k] != chain.terms[k + 1]);
        CHECK(is_ideal(chain.terms[k + 1], alg));
      }
    }
  }
}

TEST_CASE("Killing form values for sl2 and h3") {
  const auto k = killing_form(catalog_algebra("sl2"));
  // basis X, H, Y
  CHECK(k[1][1] == 8);
  CHECK(k[0][2] == 4);
  CHECK(k[2][0] == 4);
  CHECK(k[0][0] == 0);
  CHECK(k[0][1] == 0);
  CHECK(k[1][2] == 0);
  CHECK(k[2][2] == 0);
  for (const auto& row : killing_form(catalog_algebra("heisenberg", {3}))) CHECK(is_zero(row));
}

TEST_CASE("Killing form agrees with the explicit trace oracle") {
  for (const auto& key : {"sl2", "so3", "sa2", "aff1", "filiform", "heisenberg", "strictly_upper"}) {
    const auto alg = catalog_algebra(key);
    CAPTURE(key);
    CHECK(killing_form(alg) == oracle::killing(alg));
  }
}

TEST_CASE("inertia of simple forms") {
  CHECK(inertia({vec({1, 0, 0}), vec({0, -3, 0}), vec({0, 0, 0})}) == Inertia{1, 1, 1});
  CHECK(inertia({vec({0, 1}), vec({1, 0})}) == Inertia{1, 1, 0});
  CHECK(inertia({}) == Inertia{0, 0, 0});
  CHECK(inertia({vec({2, 1}), vec({1, 2})}) == Inertia{2, 0, 0});
}

TEST_CASE("inertia is invariant under random congruence") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 5;
    Inertia want;
    Rows d(n, Vector(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
      const long s = static_cast<long>(rng() % 3) - 1;
      d[i][i] = s * static_cast<long>(1 + rng() % 4);
      (s > 0 ? want.positive : s < 0 ? want.negative : want.zero) += 1;
    }
    // P unit upper triangular with a random permutation of rows: invertible.
    Rows p(n, Vector(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
      p[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) p[i][j] = static_cast<long>(rng() % 5) - 2;
    }
    std::shuffle(p.begin(), p.end(), rng);
    Rows m(n, Vector(n, Scalar(0)));  // P^T D P
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < n; ++i) m[a][b] += p[i][a] * d[i][i] * p[i][b];
    CHECK(inertia(m) == want);
  }
}

TEST_CASE("classification flags") {
  const auto sl2 = classify(catalog_algebra("sl2"));
  CHECK(sl2.is_perfect);
  CHECK(sl2.is_semisimple());
  CHECK_FALSE(sl2.is_compact_type());
  CHECK(sl2.killing_rank == 3);
  CHECK(sl2.killing_signature == Inertia{2, 1, 0});
  CHECK_FALSE(sl2.sol_length.has_value());

  const auto so3 = classify(catalog_algebra("so3"));
  CHECK(so3.is_compact_type());

  const auto h3 = classify(catalog_algebra("heisenberg", {3}));
  CHECK(h3.is_nilpotent);
  CHECK(h3.is_solvable);
  CHECK(h3.nil_length == 2);
  CHECK(h3.sol_length == 2u);
  CHECK(h3.killing_rank == 0);

  const auto sa2 = classify(catalog_algebra("sa2"));
  CHECK(sa2.is_perfect);
  CHECK_FALSE(sa2.is_semisimple());
}

TEST_CASE("classification invariants across the catalog") {
  for (const auto& l : catalog_list()) {
    if (l.kind != "algebra") continue;
    const auto c = classify(catalog_algebra(l.key));
    CAPTURE(l.key);
    CHECK(c.is_perfect == (c.nil_length == 0));
    if (c.is_nilpotent) CHECK(c.is_solvable);
    CHECK(c.sol_length.has_value() == c.is_solvable);
    if (c.is_nilpotent) CHECK(c.killing_rank == 0);
  }
}
