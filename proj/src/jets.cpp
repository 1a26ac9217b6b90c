#include "klein/jets.hpp"

#include <fmt/format.h>

#include <set>

#include "klein/errors.hpp"
#include "klein/linalg.hpp"

namespace klein {

PolyVectorField::PolyVectorField(std::size_t num_vars) : components_(num_vars, Polynomial(num_vars)) {}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.num_vars() != components_.size()) {
      throw MalformedInput("vector field component in " + std::to_string(c.num_vars()) + " variables, expected " +
                           std::to_string(components_.size()));
    }
  }
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vector PolyVectorField::value_at(const Vector& point) const {
  Vector v;
  for (const auto& c : components_) v.push_back(c.evaluate(point));
  return v;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  if (other.num_vars() != num_vars()) throw MalformedInput("vector field dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

PolyVectorField operator*(const Scalar& c, const PolyVectorField& x) {
  PolyVectorField out = x;
  for (auto& comp : out.components_) comp = c * comp;
  return out;
}

PolyVectorField vf_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.num_vars() != y.num_vars()) {
    throw MalformedInput("bracket of fields in " + std::to_string(x.num_vars()) + " and " +
                         std::to_string(y.num_vars()) + " variables");
  }
  const std::size_t n = x.num_vars();
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i] += x[j] * y[i].derivative(j);
      out[i] -= y[j] * x[i].derivative(j);
    }
  }
  return PolyVectorField(std::move(out));
}

Jet jet_of(const PolyVectorField& field, const Vector& point, long k) {
  if (k < 0) throw MalformedInput("jet order must be nonnegative, got " + std::to_string(k));
  if (point.size() != field.num_vars()) throw MalformedInput("jet base point has wrong dimension");
  const auto indices = multi_indices(field.num_vars(), static_cast<std::size_t>(k));
  Jet jet{point, static_cast<std::size_t>(k), {}};
  jet.coefficients.reserve(field.num_vars() * indices.size());
  for (const auto& comp : field.components()) {
    const auto local = comp.shifted(point);
    for (const auto& alpha : indices) {
      const auto it = local.terms().find(alpha);
      jet.coefficients.push_back(it == local.terms().end() ? Scalar(0) : it->second);
    }
  }
  return jet;
}

ActionFamily::ActionFamily(std::size_t num_vars, std::vector<PolyVectorField> generators, Vector base_point)
    : num_vars_(num_vars), generators_(std::move(generators)), base_point_(std::move(base_point)) {
  if (base_point_.size() != num_vars_) throw MalformedInput("base point has wrong dimension");
  for (const auto& g : generators_) {
    if (g.num_vars() != num_vars_) throw MalformedInput("generator has wrong number of variables");
  }
}

PolyVectorField ActionFamily::combination(const Vector& coefficients) const {
  PolyVectorField out(num_vars_);
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (sgn(coefficients[j]) != 0) out += coefficients[j] * generators_[j];
  }
  return out;
}

namespace {

using FieldKey = std::pair<std::size_t, Exponents>;

/// Coordinates of fields over the union of their (component, monomial)
/// supports.
Rows flatten(const std::vector<const PolyVectorField*>& fields) {
  std::set<FieldKey> keys;
  for (const auto* f : fields) {
    for (std::size_t i = 0; i < f->num_vars(); ++i) {
      for (const auto& [e, c] : (*f)[i].terms()) keys.insert({i, e});
    }
  }
  std::map<FieldKey, std::size_t> index;
  for (const auto& k : keys) index.emplace(k, index.size());
  Rows out;
  for (const auto* f : fields) {
    Vector v(keys.size());
    for (std::size_t i = 0; i < f->num_vars(); ++i) {
      for (const auto& [e, c] : (*f)[i].terms()) v[index.at({i, e})] = c;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> generator_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < m; ++j) labels.push_back(fmt::format("X{}", j + 1));
  return labels;
}

}  // namespace

DerivedAlgebra structure_constants_from_fields(const ActionFamily& fam, std::string name) {
  const auto& gens = fam.generators();
  const std::size_t m = gens.size();
  {
    std::vector<const PolyVectorField*> ptrs;
    for (const auto& g : gens) ptrs.push_back(&g);
    Rows flat = flatten(ptrs);
    for (std::size_t j = 0; j < m; ++j) {
      Rows prefix(flat.begin(), flat.begin() + static_cast<long>(j) + 1);
      if (rank(prefix, flat.empty() ? 0 : flat[0].size()) != j + 1) {
        throw ClosureError(fmt::format("generator X{} is linearly dependent on earlier generators", j + 1), j, j);
      }
    }
  }
  DerivedAlgebra out;
  BracketTable table;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto b = vf_bracket(gens[i], gens[j]);
      std::vector<const PolyVectorField*> ptrs;
      for (const auto& g : gens) ptrs.push_back(&g);
      ptrs.push_back(&b);
      Rows flat = flatten(ptrs);
      const Vector target = flat.back();
      flat.pop_back();
      auto coeffs = solve_combination(flat, target);
      if (!coeffs) {
        throw ClosureError(fmt::format("[X{}, X{}] is not in the span of the generators", i + 1, j + 1), i, j);
      }
      out.expansion[{i, j}] = *coeffs;
      table[{i, j}] = std::move(*coeffs);
    }
  }
  out.algebra = LieAlgebra(std::move(name), generator_labels(m), std::move(table));
  return out;
}

bool check_transitivity(const ActionFamily& fam) {
  Rows values;
  for (const auto& g : fam.generators()) values.push_back(g.value_at(fam.base_point()));
  return rank(values, fam.num_vars()) == fam.num_vars();
}

JetFiltration jet_filtration(const ActionFamily& fam, std::size_t k_max) {
  structure_constants_from_fields(fam);
  const std::size_t m = fam.generators().size();
  JetFiltration out;
  out.k_max = k_max;
  out.terms.push_back(Subspace::whole(m));
  for (std::size_t k = 0; k <= k_max; ++k) {
    // Rows of the jet map: one per jet coefficient, columns per generator.
    std::vector<Jet> jets;
    for (const auto& g : fam.generators()) jets.push_back(jet_of(g, fam.base_point(), static_cast<long>(k)));
    const std::size_t len = jets.empty() ? 0 : jets.front().coefficients.size();
    Rows map(len, Vector(m));
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t j = 0; j < m; ++j) map[r][j] = jets[j].coefficients[r];
    }
    out.terms.push_back(Subspace::span(kernel(std::move(map), m), m));
    if (out.terms.back().is_zero()) {
      out.r = k;
      break;
    }
  }
  return out;
}

JetFiltration jet_filtration(const ActionFamily& fam) { return jet_filtration(fam, 2 * fam.generators().size()); }

bool Prop4Result::pass() const {
  if (!jets.r) return false;
  for (const auto& row : rows) {
    if (!row.equal) return false;
  }
  return true;
}

Prop4Result verify_prop4(const ActionFamily& fam, std::size_t k_max) {
  if (!check_transitivity(fam)) throw NotApplicable("action is not transitive at the base point");
  const auto derived = structure_constants_from_fields(fam);
  Prop4Result result;
  result.jets = jet_filtration(fam, k_max);
  const KleinPair pair(derived.algebra, result.jets.term(0));
  result.abstract = weisfeiler_filtration(pair);
  const long last = static_cast<long>(std::max(result.jets.terms.size(), result.abstract.terms.size())) - 1;
  for (long k = -1; k < last; ++k) {
    Prop4Row row;
    row.k = k;
    row.jet_term = result.jets.term(k);
    row.abstract_term = result.abstract.term(k);
    row.equal = row.jet_term == row.abstract_term;
    result.rows.push_back(std::move(row));
  }
  return result;
}

Report report_jet_filtration(const ActionFamily& fam, std::size_t k_max) {
  const auto f = jet_filtration(fam, k_max);
  const auto labels = generator_labels(fam.generators().size());
  const std::string inputs = "point=" + format_tuple(fam.base_point());
  Report report;
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    report.add(fmt::format("jet g_{}", static_cast<long>(t) - 1), inputs,
               fmt::format("dim {}: {}", f.terms[t].dim(), format_subspace(f.terms[t], labels)), "", Status::Pass);
  }
  if (f.r) {
    report.add("jet r", inputs, fmt::format("r = {}", *f.r), "", Status::Pass);
  } else {
    report.add("jet r", inputs, fmt::format("not stabilized within k_max = {}", f.k_max), "g_r = 0", Status::Fail);
  }
  return report;
}

Report report_prop4(const ActionFamily& fam, std::size_t k_max) {
  const auto labels = generator_labels(fam.generators().size());
  const std::string inputs = "point=" + format_tuple(fam.base_point());
  Report report;
  try {
    const auto result = verify_prop4(fam, k_max);
    for (const auto& row : result.rows) {
      report.add(fmt::format("prop4 k={}", row.k), inputs,
                 fmt::format("jet {} / abstract {}", format_subspace(row.jet_term, labels),
                             format_subspace(row.abstract_term, labels)),
                 "equal", row.equal ? Status::Pass : Status::Fail);
    }
    if (result.jets.r) {
      report.add("prop4 r", inputs, fmt::format("r = {}", *result.jets.r), "", Status::Pass);
    } else {
      report.add("prop4 r", inputs, fmt::format("not stabilized within k_max = {}", k_max), "g_r = 0", Status::Fail);
    }
  } catch (const NotApplicable& e) {
    report.add("prop4", inputs, e.what(), "", Status::NotApplicable);
  }
  return report;
}

}  // namespace klein
