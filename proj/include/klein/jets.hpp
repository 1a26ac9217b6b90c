#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "klein/filtration.hpp"
#include "klein/lie_algebra.hpp"
#include "klein/polynomial.hpp"
#include "klein/report.hpp"

namespace klein {

/// sum_i components[i](x) ∂_i on Q^n.
class PolyVectorField {
 public:
  explicit PolyVectorField(std::size_t num_vars = 0);
  /// Throws MalformedInput unless every component has components.size()
  /// variables.
  explicit PolyVectorField(std::vector<Polynomial> components);

  std::size_t num_vars() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  bool is_zero() const;
  Vector value_at(const Vector& point) const;

  PolyVectorField& operator+=(const PolyVectorField& other);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator*(const Scalar& c, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// [X, Y]^i = sum_j X^j ∂_j Y^i - Y^j ∂_j X^i.
PolyVectorField vf_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// Taylor data of a field at a point through order k.
struct Jet {
  Vector base_point;
  std::size_t order = 0;
  /// Component-major: for i = 1..n, for alpha in multi_indices(n, k):
  /// ∂^alpha X^i(a) / alpha!.
  Vector coefficients;

  bool is_zero() const { return klein::is_zero(coefficients); }
};

/// Throws MalformedInput on k < 0 or a point of the wrong dimension.
Jet jet_of(const PolyVectorField& field, const Vector& point, long k);

/// Finite family of polynomial fields spanning a Lie algebra of vector
/// fields, with the base point of the jet filtration.
class ActionFamily {
 public:
  /// Throws MalformedInput on inconsistent variable counts.
  ActionFamily(std::size_t num_vars, std::vector<PolyVectorField> generators, Vector base_point);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<PolyVectorField>& generators() const { return generators_; }
  const Vector& base_point() const { return base_point_; }
  /// Same generators at another point.
  ActionFamily at(Vector point) const { return ActionFamily(num_vars_, generators_, std::move(point)); }
  /// sum_j c_j X_j
  PolyVectorField combination(const Vector& coefficients) const;

 private:
  std::size_t num_vars_;
  std::vector<PolyVectorField> generators_;
  Vector base_point_;
};

/// Abstract algebra read off the generator brackets: [e_i, e_j] has the
/// coordinates of vf_bracket(X_i, X_j) in the generator basis.
struct DerivedAlgebra {
  LieAlgebra algebra;
  /// Coordinates of every pairwise bracket, i < j (zero entries included).
  BracketTable expansion;
};

/// Throws ClosureError naming the offending pair when a bracket leaves the
/// span, or naming (i, i) when generator i depends on earlier ones.
DerivedAlgebra structure_constants_from_fields(const ActionFamily& fam, std::string name = "fields");

/// Generator values at the base point span Q^n.
bool check_transitivity(const ActionFamily& fam);

/// Kernel chain of the jet maps on the coefficient space Q^m:
/// terms = [Q^m, g_0, g_1, ..., g_K] where the chain stops at the first
/// zero term or at k_max.
struct JetFiltration {
  std::vector<Subspace> terms;
  /// Smallest r with g_r = 0, if reached within k_max.
  std::optional<std::size_t> r;
  std::size_t k_max = 0;

  const Subspace& term(long k) const {
    const auto idx = static_cast<std::size_t>(k + 1);
    return idx < terms.size() ? terms[idx] : terms.back();
  }
};

/// Verifies closure first. A missing r is a not-stabilized result, never
/// an exception.
JetFiltration jet_filtration(const ActionFamily& fam, std::size_t k_max);
/// k_max = 2m.
JetFiltration jet_filtration(const ActionFamily& fam);

struct Prop4Row {
  long k = 0;
  Subspace jet_term;
  Subspace abstract_term;
  bool equal = false;
};

struct Prop4Result {
  JetFiltration jets;
  Filtration abstract;
  std::vector<Prop4Row> rows;
  bool pass() const;
};

/// Throws NotApplicable if the family is not transitive at its base point.
Prop4Result verify_prop4(const ActionFamily& fam, std::size_t k_max);

Report report_jet_filtration(const ActionFamily& fam, std::size_t k_max);
Report report_prop4(const ActionFamily& fam, std::size_t k_max);

}  // namespace klein
