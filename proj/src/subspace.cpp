#include "klein/subspace.hpp"

#include <string>

#include "klein/errors.hpp"
#include "klein/linalg.hpp"

namespace klein {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw MalformedInput("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) +
                         " vs " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::span<const Vector> generators, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) {
      throw MalformedInput("vector of length " + std::to_string(g.size()) +
                           " in ambient dimension " + std::to_string(ambient_dim));
    }
    if (!klein::is_zero(g)) s.basis_.push_back(g);
  }
  s.pivots_ = reduce_rows(s.basis_, ambient_dim);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (sgn(c) == 0) continue;
    const Scalar factor = -c;
    axpy(v, factor, basis_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) {
    throw MalformedInput("membership test with vector of length " + std::to_string(v.size()) +
                         " in ambient dimension " + std::to_string(ambient_dim_));
  }
  return klein::is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (const auto& row : other.basis_) {
    if (!contains(row)) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Rows Subspace::annihilator() const { return kernel(basis_, ambient_dim_); }

Subspace canonicalize(std::span<const Vector> vectors, std::size_t n) {
  return Subspace::span(vectors, n);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Rows all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(all, a.ambient_dim());
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // Solve sum_i c_i a_i - sum_j d_j b_j = 0; the a-part of each solution
  // spans the intersection.
  const std::size_t da = a.dim();
  const std::size_t unknowns = da + b.dim();
  Rows system(n, Vector(unknowns));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < da; ++i) system[r][i] = a.basis()[i][r];
    for (std::size_t j = 0; j < b.dim(); ++j) system[r][da + j] = -b.basis()[j][r];
  }
  Rows members;
  for (const auto& sol : kernel(std::move(system), unknowns)) {
    Vector v(n);
    for (std::size_t i = 0; i < da; ++i) axpy(v, sol[i], a.basis()[i]);
    members.push_back(std::move(v));
  }
  return Subspace::span(members, n);
}

bool span_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

}  // namespace klein
