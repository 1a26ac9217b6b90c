#include "doctest.h"
#include "helpers.hpp"
#include "klein/catalog.hpp"
#include "klein/errors.hpp"
#include "klein/filtration.hpp"
#include "klein/io.hpp"
#include "klein/jets.hpp"
#include "oracles.hpp"

using namespace klein;
using namespace klein::test;

namespace {

// c x^p d/dx on the line
PolyVectorField line_field(long c, unsigned p) {
  return PolyVectorField(std::vector<Polynomial>{Polynomial::monomial(Scalar(c), {p})});
}

PolyVectorField random_field(std::mt19937& rng, std::size_t n, unsigned max_degree) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(n);
    for (int t = 0; t < 4; ++t) {
      Exponents e(n, 0);
      unsigned budget = static_cast<unsigned>(rng() % (max_degree + 1));
      for (std::size_t v = 0; v < n && budget > 0; ++v) {
        const unsigned take = static_cast<unsigned>(rng() % (budget + 1));
        e[v] = take;
        budget -= take;
      }
      p.add_term(Scalar(static_cast<long>(rng() % 7) - 3), e);
    }
    comps.push_back(p);
  }
  return PolyVectorField(comps);
}

}  // namespace

TEST_CASE("vector field brackets on the line") {
  CHECK(vf_bracket(line_field(1, 1), line_field(1, 0)) == line_field(-1, 0));
  CHECK(vf_bracket(line_field(1, 2), line_field(1, 1)) == line_field(-1, 2));
  CHECK(vf_bracket(line_field(1, 2), line_field(1, 2)).is_zero());
  CHECK_THROWS_AS(vf_bracket(line_field(1, 0), PolyVectorField(2)), MalformedInput);
}

TEST_CASE("vector field bracket matches the derivation oracle, is antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto x = random_field(rng, n, 3), y = random_field(rng, n, 3), z = random_field(rng, n, 3);
    CHECK(vf_bracket(x, y) == oracle::vf_bracket(x, y));
    CHECK((vf_bracket(x, y) + vf_bracket(y, x)).is_zero());
    const auto jac = vf_bracket(x, vf_bracket(y, z)) + vf_bracket(y, vf_bracket(z, x)) + vf_bracket(z, vf_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("jets on hand examples") {
  const auto x2 = line_field(1, 2);
  CHECK(jet_of(x2, vec({0}), 1).is_zero());
  const auto j2 = jet_of(x2, vec({0}), 2);
  CHECK(j2.coefficients == vec({0, 0, 1}));
  CHECK(jet_of(x2, vec({1}), 1).coefficients == vec({1, 2}));
  CHECK_THROWS_AS(jet_of(x2, vec({0}), -1), MalformedInput);
  CHECK_THROWS_AS(jet_of(x2, vec({0, 0}), 1), MalformedInput);
}

TEST_CASE("jet coefficients match repeated differentiation and count n*C(n+k,k)") {
  std::mt19937 rng(19);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3;
    const std::size_t k = t % 4;
    const auto f = random_field(rng, n, 4);
    const auto a = random_vector(rng, n, -2, 2);
    const auto j = jet_of(f, a, static_cast<long>(k));
    CHECK(j.coefficients == oracle::jet(f, a, k));
    std::size_t binom = 1;
    for (std::size_t i = 1; i <= k; ++i) binom = binom * (n + i) / i;
    CHECK(j.coefficients.size() == n * binom);
  }
}

TEST_CASE("jets are linear in the field") {
  std::mt19937 rng(37);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto x = random_field(rng, n, 3), y = random_field(rng, n, 3);
    const auto a = random_vector(rng, n, -2, 2);
    const Scalar alpha = frac(t - 4, 3), beta = frac(2, 1 + t % 5);
    const auto lhs = jet_of(alpha * x + beta * y, a, 2).coefficients;
    const auto rhs = alpha * jet_of(x, a, 2).coefficients + beta * jet_of(y, a, 2).coefficients;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("structure constants read off the projective line fields") {
  const auto derived = structure_constants_from_fields(catalog_action("sl2_line"));
  const auto& alg = derived.algebra;
  CHECK(alg.basis_bracket(0, 1) == vec({1, 0, 0}));
  CHECK(alg.basis_bracket(0, 2) == vec({0, 2, 0}));
  CHECK(alg.basis_bracket(1, 2) == vec({0, 0, 1}));
  CHECK(validate_algebra(alg).ok);
  CHECK(derived.expansion.size() == 3);

  const auto aff = structure_constants_from_fields(catalog_action("affine_line")).algebra;
  CHECK(aff.basis_bracket(0, 1) == vec({1, 0}));
  CHECK(structure_constants_from_fields(catalog_action("translations", {2})).algebra.brackets().empty());
}

TEST_CASE("closure failures name the offending pair") {
  try {
    structure_constants_from_fields(load_action(data_path("not_closed_action.json")));
    FAIL("expected ClosureError");
  } catch (const ClosureError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
  }
  const ActionFamily dependent(1, {line_field(1, 0), line_field(2, 0)}, vec({0}));
  try {
    structure_constants_from_fields(dependent);
    FAIL("expected ClosureError");
  } catch (const ClosureError& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 1);
  }
}

TEST_CASE("transitivity") {
  CHECK(check_transitivity(catalog_action("sl2_line")));
  CHECK_FALSE(check_transitivity(ActionFamily(1, {line_field(1, 1)}, vec({0}))));
  CHECK(check_transitivity(catalog_action("translations", {2}).at(vec({3, -1}))));
}

TEST_CASE("jet filtration on the projective line") {
  const auto f0 = jet_filtration(catalog_action("sl2_line"));
  CHECK(f0.r == 2u);
  CHECK(f0.term(0) == units(3, {1, 2}));
  CHECK(f0.term(1) == units(3, {2}));
  CHECK(f0.term(2).is_zero());

  const auto f1 = jet_filtration(catalog_action("sl2_line", {1}));
  CHECK(f1.r == 2u);
  CHECK(f1.term(1) == rows(3, {{1, -2, 1}}));

  const auto half = jet_filtration(load_action(data_path("sl2_line_half.json")));
  CHECK(half.r == 2u);

  CHECK(jet_filtration(catalog_action("affine_line")).r == 1u);
  CHECK(jet_filtration(catalog_action("translations", {2})).r == 0u);
}

TEST_CASE("unreached stabilization is reported, not truncated") {
  const auto f = jet_filtration(catalog_action("sl2_line"), 1);
  CHECK_FALSE(f.r.has_value());
  CHECK(f.k_max == 1);
  const auto report = report_jet_filtration(catalog_action("sl2_line"), 1);
  bool finding = false;
  for (const auto& rec : report.records) finding |= rec.status != Status::Pass;
  CHECK(finding);
}

TEST_CASE("jet chains descend and match the abstract filtration for catalog actions") {
  for (const auto& l : catalog_list()) {
    if (l.kind != "action") continue;
    const auto base = catalog_action(l.key);
    std::optional<std::size_t> r;
    for (const auto& point : {base.base_point(), Vector(base.num_vars(), Scalar(1)),
                              Vector(base.num_vars(), frac(-2, 3))}) {
      const auto fam = base.at(point);
      CAPTURE(l.key);
      const auto jets = jet_filtration(fam);
      for (std::size_t i = 0; i + 1 < jets.terms.size(); ++i) CHECK(jets.terms[i].contains(jets.terms[i + 1]));
      const auto p4 = verify_prop4(fam, 2 * fam.generators().size());
      CHECK(p4.pass());
      REQUIRE(jets.r.has_value());
      if (r) CHECK(*r == *jets.r);
      r = jets.r;
      CHECK(order(p4.abstract) == *jets.r);
    }
  }
}

TEST_CASE("comparison requires a transitive family") {
  CHECK_THROWS_AS(verify_prop4(ActionFamily(1, {line_field(1, 1)}, vec({0})), 2), NotApplicable);
}
