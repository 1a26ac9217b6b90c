#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "klein/filtration.hpp"
#include "klein/lie_algebra.hpp"
#include "klein/report.hpp"
#include "klein/series.hpp"

namespace klein {

// ---------------------------------------------------------------------------
// Alternative form of the filtration recursion:
//   F_{k+1} versus {x in g : [x, g] ⊆ F_k}.
// The two agree only when g has no center outside the chain, so
// disagreements are reported as findings.

struct SecondFormRow {
  std::size_t k = 0;
  Subspace next_term;    // F_{k+1}
  Subspace second_form;  // {x in g : [x, g] ⊆ F_k}
  bool agree = false;
};

/// One row per k = 0 .. stabilization index. Throws NotEffective.
std::vector<SecondFormRow> check_second_form(const KleinPair& pair);

// ---------------------------------------------------------------------------
// [F_i, F_j] ⊆ F_{i+j} for i, j >= 0, and nilpotency of F_1.

struct Eq10Violation {
  std::size_t i = 0, j = 0;
  Subspace bracket;
  Subspace target;
};

struct Eq10Result {
  std::size_t pairs_checked = 0;
  std::vector<Eq10Violation> violations;
  bool f1_nilpotent = false;
  // F_1 acts faithfully by nilpotent maps only when the pair is effective.
  bool f1_applicable = false;

  bool pass() const { return violations.empty() && (f1_nilpotent || !f1_applicable); }
};

/// Checks all 0 <= i, j <= stabilization index (the stable term repeats
/// beyond it).
Eq10Result verify_eq10(const KleinPair& pair, const Filtration& filtration);
Eq10Result verify_eq10(const KleinPair& pair);

// ---------------------------------------------------------------------------
// g_0 ∩ g_(r-1) is nonzero for an effective pair of order r >= 1.

struct Prop6Result {
  std::size_t order = 0;
  Subspace lower_central_term;  // g_(r-1)
  Subspace intersection;
  bool pass() const { return intersection.dim() >= 1; }
};

/// Throws NotEffective, or NotApplicable when r = 0.
Prop6Result verify_prop6(const KleinPair& pair);

// ---------------------------------------------------------------------------
// Nilpotent g of nil-length n: order <= n + 1.

struct Cor7Result {
  std::size_t order = 0;
  std::size_t nil_length = 0;
  bool pass() const { return order <= nil_length + 1; }
};

/// Throws NotApplicable for non-nilpotent g, NotEffective.
Cor7Result verify_cor7(const KleinPair& pair);

// ---------------------------------------------------------------------------
// Normalizer towers of a one-dimensional seed in a nilpotent algebra.

struct NormalizerTower {
  Vector seed;
  /// N_0 = (seed) ⊊ N_1 ⊊ ... ⊊ N_k = g.
  std::vector<Subspace> chain;
  Subspace k_sub;  // N_{k-2}
  Subspace h_sub;  // N_{k-1}
};

/// The three normality conditions plus the proper inclusions k ⊊ h ⊊ g,
/// each evaluated with bracket_span (independently of the normalizer).
struct NormalityConditions {
  bool k_proper_in_h = false;
  bool h_proper_in_g = false;
  bool k_normal_in_h = false;
  bool h_normal_in_g = false;
  bool k_not_normal_in_g = false;

  bool all() const { return k_proper_in_h && h_proper_in_g && k_normal_in_h && h_normal_in_g && k_not_normal_in_g; }
  /// Name of the first failing condition, or nullopt.
  std::optional<std::string> first_failure() const;
};

NormalityConditions check_normality(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub);

/// Throws NotApplicable (g not nilpotent, abelian or dim < 2) or BadSeed
/// ((seed) is an ideal). Verifies the returned pair before returning.
NormalizerTower normalizer_tower(const Vector& seed, const LieAlgebra& alg);

/// Seed scan: e_1, e_2, ... then e_i + e_j in lexicographic order; the
/// first seed whose span is not an ideal is used.
NormalizerTower lemma8_pair(const LieAlgebra& alg);

// ---------------------------------------------------------------------------
// For (k, h) as above and (g, k) effective: k^(i) ⊆ k_i for all i and
// order(g, k) >= s(k).

struct InclusionRow {
  std::size_t i = 0;
  Subspace derived_term;     // k^(i)
  Subspace filtration_term;  // k_i
  bool holds = false;
};

struct Prop9Result {
  std::vector<InclusionRow> inclusions;
  std::size_t order = 0;
  std::size_t sol_length = 0;
  bool inclusions_hold() const;
  bool pass() const { return inclusions_hold() && order >= sol_length; }
};

/// Throws NotApplicable naming the failed hypothesis, NotEffective.
Prop9Result verify_prop9(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub);

// ---------------------------------------------------------------------------
// Witness sequence a, ad(x_1)(a), ..., ad(x_r, ..., x_1)(a).

struct WitnessChain {
  std::size_t order = 0;
  Vector a;
  std::vector<Vector> xs;      // x_1 .. x_r
  std::vector<Vector> values;  // values[i] = ad(x_i, ..., x_1)(a), i = 0 .. r
  /// Number of x_i found by the basis scan (the rest by the linear solve).
  std::size_t basis_hits = 0;

  bool xs_outside_stabilizer = false;  // x_i in g \ g_0
  bool values_in_layers = false;       // values[i] in F_{r-i-1} \ F_{r-i}, F_{-1} = g
  bool eq12_membership = false;        // 0 != values[r-1] in g_0 ∩ g_(r-1)

  bool pass() const { return xs_outside_stabilizer && values_in_layers && eq12_membership; }
};

/// Throws NotEffective, or NotApplicable when r = 0.
WitnessChain witness_chain(const KleinPair& pair);

// ---------------------------------------------------------------------------
// Semisimplicity/compactness against order 1. Only the stabilizer clause is
// asserted; the algebra clause is recorded as a finding when it disagrees.

struct Prop5Result {
  bool algebra_semisimple = false;
  bool algebra_compact = false;
  bool stabilizer_semisimple = false;
  bool stabilizer_compact = false;
  std::size_t order = 0;
  Status stabilizer_clause = Status::NotApplicable;
  Status algebra_clause = Status::NotApplicable;
};

/// Throws NotEffective, or NotApplicable when g_0 = 0.
Prop5Result verify_prop5(const KleinPair& pair);

// ---------------------------------------------------------------------------
// Report builders used by the CLI. Each catches the documented
// NotApplicable/NotEffective errors and turns them into records.

Report report_filtration(const KleinPair& pair);
Report report_second_form(const KleinPair& pair);
Report report_eq10(const KleinPair& pair);
Report report_prop5(const KleinPair& pair);
Report report_prop6(const KleinPair& pair);
Report report_cor7(const KleinPair& pair);
Report report_witness(const KleinPair& pair);
Report report_lemma8(const LieAlgebra& alg);
Report report_prop9(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub);

}  // namespace klein
