#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klein/scalar.hpp"
#include "klein/subspace.hpp"

namespace klein {

/// Structure-constant table keyed by (i, j) with i < j; the value holds the
/// coordinates of [e_i, e_j]. Missing keys mean zero.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry is structural; the Jacobi identity is checked separately
/// by validate_algebra.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws MalformedInput on i >= j, out-of-range indices, wrong vector
  /// lengths, or a label count different from `labels.size()`.
  LieAlgebra(std::string name, std::vector<std::string> labels, BracketTable brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Nonzero entries only.
  const BracketTable& brackets() const { return brackets_; }

  /// [e_i, e_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the table. Throws MalformedInput on length mismatch.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x): column c holds [x, e_c].
  Rows ad_matrix(const Vector& x) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  BracketTable brackets_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  Vector jacobiator;
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

/// Checks the Jacobi identity on every basis triple i < j < k.
ValidationReport validate_algebra(const LieAlgebra& alg);

/// Canonical span of all brackets [a, b] with a, b running over the bases.
Subspace bracket_span(const Subspace& a, const Subspace& b, const LieAlgebra& alg);

/// {x in V : [x, W] ⊆ U}, the linear-solve primitive behind every
/// filtration, normalizer and centralizer here.
Subspace transporter(const Subspace& v, const Subspace& w, const Subspace& u, const LieAlgebra& alg);

/// N(h) = {x : [x, h] ⊆ h}.
Subspace normalizer(const Subspace& h, const LieAlgebra& alg);

bool is_subalgebra(const Subspace& s, const LieAlgebra& alg);
bool is_ideal(const Subspace& s, const LieAlgebra& alg);

/// Structure constants of a subalgebra in the basis given by its canonical
/// rows. Throws InvalidPair if `sub` is not bracket-closed.
LieAlgebra restrict_to(const Subspace& sub, const LieAlgebra& alg);

/// An algebra with a bracket-closed stabilizer subspace.
class KleinPair {
 public:
  /// Throws InvalidPair if the stabilizer is not closed under the bracket,
  /// MalformedInput on an ambient-dimension mismatch.
  KleinPair(LieAlgebra algebra, Subspace stabilizer);

  const LieAlgebra& algebra() const { return algebra_; }
  const Subspace& stabilizer() const { return stabilizer_; }

 private:
  LieAlgebra algebra_;
  Subspace stabilizer_;
};

}  // namespace klein
