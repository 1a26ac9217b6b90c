#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "klein/lie_algebra.hpp"
#include "klein/subspace.hpp"

namespace klein {

enum class SeriesKind { LowerCentral, Derived };

/// Descending chain term_0 ⊇ term_1 ⊇ ... listed up to the first
/// occurrence of its stable term. `length` is the first k with
/// term_k == term_{k+1}, so terms.size() == length + 1.
struct SeriesChain {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;
  std::size_t length = 0;

  const Subspace& terminal() const { return terms.back(); }
  /// term_k for any k, repeating the stable term past `length`.
  const Subspace& term(std::size_t k) const { return k < terms.size() ? terms[k] : terms.back(); }
};

/// g_(0) = g, g_(k+1) = [g_(k), g].
SeriesChain lower_central_series(const LieAlgebra& alg);
/// s_(0) = s, s_(k+1) = [s_(k), s], for a subalgebra s.
SeriesChain lower_central_series(const Subspace& sub, const LieAlgebra& alg);
/// g^(0) = g, g^(k+1) = [g^(k), g^(k)].
SeriesChain derived_series(const LieAlgebra& alg);
SeriesChain derived_series(const Subspace& sub, const LieAlgebra& alg);

/// K(e_i, e_j) = trace(ad e_i ∘ ad e_j).
Rows killing_form(const LieAlgebra& alg);

/// Sylvester inertia of a symmetric rational matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia by symmetric Gaussian elimination (congruence) over Q.
Inertia inertia(Rows symmetric);

struct Classification {
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_perfect = false;
  /// Stabilization length of the lower central series.
  std::size_t nil_length = 0;
  /// Derived length; set only for solvable algebras.
  std::optional<std::size_t> sol_length;
  std::size_t killing_rank = 0;
  Inertia killing_signature;

  /// Killing form nondegenerate.
  bool is_semisimple() const { return killing_signature.zero == 0; }
  /// Killing form negative definite (compact semisimple type).
  bool is_compact_type() const {
    return killing_signature.positive == 0 && killing_signature.zero == 0 && killing_signature.negative > 0;
  }
};

Classification classify(const LieAlgebra& alg);

}  // namespace klein
