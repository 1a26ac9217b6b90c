#include "klein/lie_algebra.hpp"

#include "klein/errors.hpp"
#include "klein/linalg.hpp"

namespace klein {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, BracketTable brackets)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (auto& [key, value] : brackets) {
    const auto [i, j] = key;
    if (i >= j || j >= n) {
      throw MalformedInput("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") must satisfy i < j < dim = " + std::to_string(n));
    }
    if (value.size() != n) {
      throw MalformedInput("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") has " + std::to_string(value.size()) + " coordinates, expected " +
                           std::to_string(n));
    }
    if (!is_zero(value)) brackets_.emplace(key, std::move(value));
  }
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vector(dim());
  const bool swapped = i > j;
  const auto it = brackets_.find(swapped ? std::pair{j, i} : std::pair{i, j});
  if (it == brackets_.end()) return zero_vector(dim());
  return swapped ? Scalar(-1) * it->second : it->second;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw MalformedInput("bracket of vectors of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in dimension " + std::to_string(dim()));
  }
  Vector out(dim());
  Scalar c;
  for (const auto& [key, value] : brackets_) {
    const auto [i, j] = key;
    c = x[i] * y[j] - x[j] * y[i];
    axpy(out, c, value);
  }
  return out;
}

Rows LieAlgebra::ad_matrix(const Vector& x) const {
  const std::size_t n = dim();
  Rows m(n, Vector(n));
  for (std::size_t c = 0; c < n; ++c) {
    const Vector col = bracket(x, unit_vector(n, c));
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  return m;
}

ValidationReport validate_algebra(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector sum = alg.bracket(ei, alg.basis_bracket(j, k));
        sum = sum + alg.bracket(ej, alg.basis_bracket(k, i));
        sum = sum + alg.bracket(ek, alg.basis_bracket(i, j));
        if (!is_zero(sum)) report.violations.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Subspace bracket_span(const Subspace& a, const Subspace& b, const LieAlgebra& alg) {
  if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim()) {
    throw MalformedInput("bracket_span: subspace dimension does not match algebra");
  }
  Rows products;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      auto v = alg.bracket(x, y);
      if (!is_zero(v)) products.push_back(std::move(v));
    }
  }
  return Subspace::span(products, alg.dim());
}

Subspace transporter(const Subspace& v, const Subspace& w, const Subspace& u, const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (v.ambient_dim() != n || w.ambient_dim() != n || u.ambient_dim() != n) {
    throw MalformedInput("transporter: subspace dimension does not match algebra");
  }
  if (v.is_zero() || u.is_whole()) return v;
  // x = sum_i c_i v_i; require f([x, w_j]) = 0 for every annihilator f of U.
  const Rows ann = u.annihilator();
  const std::size_t unknowns = v.dim();
  Rows system;
  std::vector<Vector> images(unknowns);
  for (const auto& wj : w.basis()) {
    for (std::size_t i = 0; i < unknowns; ++i) images[i] = alg.bracket(v.basis()[i], wj);
    for (const auto& f : ann) {
      Vector row(unknowns);
      for (std::size_t i = 0; i < unknowns; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(f[c]) != 0 && sgn(images[i][c]) != 0) row[i] += f[c] * images[i][c];
        }
      }
      if (!is_zero(row)) system.push_back(std::move(row));
    }
  }
  if (system.empty()) return v;
  Rows members;
  for (const auto& sol : kernel(std::move(system), unknowns)) {
    Vector x(n);
    for (std::size_t i = 0; i < unknowns; ++i) axpy(x, sol[i], v.basis()[i]);
    members.push_back(std::move(x));
  }
  return Subspace::span(members, n);
}

Subspace normalizer(const Subspace& h, const LieAlgebra& alg) {
  return transporter(Subspace::whole(alg.dim()), h, h, alg);
}

bool is_subalgebra(const Subspace& s, const LieAlgebra& alg) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!s.contains(alg.bracket(b[i], b[j]))) return false;
    }
  }
  return true;
}

bool is_ideal(const Subspace& s, const LieAlgebra& alg) {
  for (const auto& x : s.basis()) {
    for (std::size_t c = 0; c < alg.dim(); ++c) {
      if (!s.contains(alg.bracket(x, unit_vector(alg.dim(), c)))) return false;
    }
  }
  return true;
}

LieAlgebra restrict_to(const Subspace& sub, const LieAlgebra& alg) {
  if (sub.ambient_dim() != alg.dim()) {
    throw MalformedInput("restrict_to: subspace dimension does not match algebra");
  }
  const auto& b = sub.basis();
  const std::size_t d = b.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i + 1));
  BracketTable table;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector v = alg.bracket(b[i], b[j]);
      if (!sub.contains(v)) throw InvalidPair("subspace is not closed under the bracket");
      table[{i, j}] = sub.coordinates(v);
    }
  }
  return LieAlgebra(alg.name() + "|sub", std::move(labels), std::move(table));
}

KleinPair::KleinPair(LieAlgebra algebra, Subspace stabilizer)
    : algebra_(std::move(algebra)), stabilizer_(std::move(stabilizer)) {
  if (stabilizer_.ambient_dim() != algebra_.dim()) {
    throw MalformedInput("stabilizer lives in dimension " + std::to_string(stabilizer_.ambient_dim()) +
                         ", algebra has dimension " + std::to_string(algebra_.dim()));
  }
  if (!is_subalgebra(stabilizer_, algebra_)) {
    throw InvalidPair("stabilizer is not closed under the bracket");
  }
}

}  // namespace klein
