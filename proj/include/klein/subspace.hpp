#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "klein/scalar.hpp"

namespace klein {

/// A linear subspace of Q^n held as its reduced row-echelon basis. The
/// representation is canonical: two subspaces are equal as sets exactly
/// when their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent) generators. All must have
  /// length `ambient_dim`; throws MalformedInput otherwise.
  static Subspace span(std::span<const Vector> generators, std::size_t ambient_dim);
  static Subspace span(std::initializer_list<Vector> generators, std::size_t ambient_dim) {
    return span(std::span<const Vector>(generators.begin(), generators.size()), ambient_dim);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_dim_; }

  const Rows& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of `v` after eliminating the pivot columns; zero iff v is in
  /// the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member with respect to basis(). Undefined for
  /// non-members.
  Vector coordinates(const Vector& v) const;

  /// Basis of the linear functionals vanishing on the subspace (as vectors
  /// in the dual coordinates).
  Rows annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Lexicographic on the canonical basis matrix; used for stable sorting.
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  std::size_t ambient_dim_ = 0;
  Rows basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of a list of vectors of length n.
Subspace canonicalize(std::span<const Vector> vectors, std::size_t n);

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace span_intersect(const Subspace& a, const Subspace& b);
bool span_contains(const Subspace& a, const Vector& v);

}  // namespace klein
