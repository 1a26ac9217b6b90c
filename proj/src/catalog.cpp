#include "klein/catalog.hpp"

#include <fmt/format.h>

#include "klein/errors.hpp"

namespace klein {

namespace {

Vector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vector v(n);
  for (const auto& [i, c] : entries) v[i] = c;
  return v;
}

std::vector<std::string> e_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fmt::format("e{}", i + 1));
  return labels;
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(fmt::format("abelian({})", n), e_labels(n), {}); }

// Basis x_1..x_m, y_1..y_m, z with [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t dim) {
  const std::size_t m = (dim - 1) / 2;
  std::vector<std::string> labels;
  if (m == 1) {
    labels = e_labels(3);
  } else {
    for (std::size_t i = 0; i < m; ++i) labels.push_back(fmt::format("x{}", i + 1));
    for (std::size_t i = 0; i < m; ++i) labels.push_back(fmt::format("y{}", i + 1));
    labels.push_back("z");
  }
  BracketTable t;
  for (std::size_t i = 0; i < m; ++i) t[{i, m + i}] = vec(dim, {{dim - 1, 1}});
  return LieAlgebra(m == 1 ? "h3" : fmt::format("heisenberg({})", dim), std::move(labels), std::move(t));
}

// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1.
LieAlgebra filiform(std::size_t n) {
  BracketTable t;
  for (std::size_t i = 1; i + 1 < n; ++i) t[{0, i}] = vec(n, {{i + 1, 1}});
  return LieAlgebra(fmt::format("filiform({})", n), e_labels(n), std::move(t));
}

// Basis X, H, Y: [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
BracketTable sl2_table(std::size_t n) {
  BracketTable t;
  t[{0, 1}] = vec(n, {{0, -2}});
  t[{0, 2}] = vec(n, {{1, 1}});
  t[{1, 2}] = vec(n, {{2, -2}});
  return t;
}

LieAlgebra sl2() { return LieAlgebra("sl2", {"X", "H", "Y"}, sl2_table(3)); }

LieAlgebra aff1() {
  BracketTable t;
  t[{0, 1}] = vec(2, {{1, 1}});
  return LieAlgebra("aff1", e_labels(2), std::move(t));
}

// sl2 ⋉ Q^2 with the defining representation on u = (1,0), v = (0,1):
// X u = 0, X v = u, H u = u, H v = -v, Y u = v, Y v = 0.
LieAlgebra sa2() {
  BracketTable t = sl2_table(5);
  t[{0, 4}] = vec(5, {{3, 1}});
  t[{1, 3}] = vec(5, {{3, 1}});
  t[{1, 4}] = vec(5, {{4, -1}});
  t[{2, 3}] = vec(5, {{4, 1}});
  return LieAlgebra("sa2", {"X", "H", "Y", "u", "v"}, std::move(t));
}

// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra so3() {
  BracketTable t;
  t[{0, 1}] = vec(3, {{2, 1}});
  t[{1, 2}] = vec(3, {{0, 1}});
  t[{0, 2}] = vec(3, {{1, -1}});
  return LieAlgebra("so3", e_labels(3), std::move(t));
}

// Basis E_ij (i < j) in lexicographic order;
// [E_ij, E_kl] = δ_jk E_il - δ_li E_kj.
LieAlgebra strictly_upper(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      idx.emplace_back(i, j);
      labels.push_back(fmt::format("E{}{}", i + 1, j + 1));
    }
  }
  const std::size_t d = idx.size();
  auto position = [&](std::size_t i, std::size_t j) {
    for (std::size_t p = 0; p < d; ++p) {
      if (idx[p] == std::pair{i, j}) return p;
    }
    return d;
  };
  BracketTable t;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto [i, j] = idx[a];
      const auto [k, l] = idx[b];
      Vector v(d);
      if (j == k) v[position(i, l)] += 1;
      if (l == i) v[position(k, j)] -= 1;
      if (!is_zero(v)) t[{a, b}] = std::move(v);
    }
  }
  return LieAlgebra(fmt::format("strictly_upper({})", n), std::move(labels), std::move(t));
}

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> indices) {
  Rows rows;
  for (auto i : indices) rows.push_back(unit_vector(n, i));
  return Subspace::span(rows, n);
}

// Polynomial helpers for actions.
Polynomial mono(long c, Exponents e) { return Polynomial::monomial(Scalar(c), std::move(e)); }

PolyVectorField field(std::vector<Polynomial> comps) { return PolyVectorField(std::move(comps)); }

ActionFamily sl2_line(long point) {
  return ActionFamily(1,
                      {field({mono(1, {0})}), field({mono(1, {1})}), field({mono(1, {2})})},
                      Vector{Scalar(point)});
}

ActionFamily affine_line(long point) {
  return ActionFamily(1, {field({mono(1, {0})}), field({mono(1, {1})})}, Vector{Scalar(point)});
}

ActionFamily translations(std::size_t n) {
  std::vector<PolyVectorField> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> comps(n, Polynomial(n));
    comps[i] = Polynomial::constant(n, Scalar(1));
    gens.push_back(field(std::move(comps)));
  }
  return ActionFamily(n, std::move(gens), Vector(n));
}

// ∂1, ∂2, x2 ∂1, x1 ∂1 - x2 ∂2, x1 ∂2: the special affine group of the plane.
ActionFamily sa2_plane() {
  const Polynomial zero(2);
  const auto one = Polynomial::constant(2, Scalar(1));
  const auto x1 = Polynomial::variable(2, 0);
  const auto x2 = Polynomial::variable(2, 1);
  return ActionFamily(2,
                      {field({one, zero}), field({zero, one}), field({x2, zero}), field({x1, Scalar(-1) * x2}),
                       field({zero, x1})},
                      Vector(2));
}

[[noreturn]] void unknown_key(const std::string& key) {
  std::string keys;
  for (const auto& l : catalog_list()) keys += (keys.empty() ? "" : ", ") + l.key;
  throw CatalogError("unknown catalog key \"" + key + "\"; available: " + keys);
}

}  // namespace

const std::vector<CatalogListing>& catalog_list() {
  static const std::vector<CatalogListing> listing = {
      {"abelian", "algebra", {{"n", 0, 8, 2}}, "abelian algebra Q^n"},
      {"heisenberg", "algebra", {{"dim", 3, 7, 3}}, "Heisenberg algebra of odd dimension 2m+1, [x_i,y_i] = z"},
      {"filiform", "algebra", {{"n", 3, 8, 4}}, "filiform L_n, [e1,e_i] = e_{i+1}, nil-length n-1"},
      {"sl2", "algebra", {}, "sl(2) in the basis X, H, Y"},
      {"aff1", "algebra", {}, "affine algebra of the line, [e1,e2] = e2"},
      {"sa2", "algebra", {}, "sl(2) ⋉ Q^2 with the defining representation"},
      {"so3", "algebra", {}, "so(3), compact simple"},
      {"strictly_upper", "algebra", {{"n", 2, 5, 4}}, "strictly upper triangular n x n matrices"},
      {"sl2_borel", "pair", {}, "(sl2, span(H, Y)): projective line, order 2"},
      {"h3_e1", "pair", {}, "(h3, span(e1)): effective, order 1"},
      {"h3_center", "pair", {}, "(h3, span(e3)): center, not effective"},
      {"aff1_e1", "pair", {}, "(aff1, span(e1)): affine line, order 1"},
      {"sa2_sl2", "pair", {}, "(sa2, sl2): special affine plane, order 1"},
      {"so3_e3", "pair", {}, "(so3, span(e3)): sphere, order 1"},
      {"filiform_pairs",
       "pair",
       {{"n", 3, 8, 4}, {"seed", 1, 6, 1}},
       "(L_n, span(e2, ..., e_{seed+1})), seed <= n-2: effective, order seed"},
      {"sl2_line", "action", {{"point", -5, 5, 0}}, "∂, x∂, x²∂ on the line at an integer point"},
      {"affine_line", "action", {{"point", -5, 5, 0}}, "∂, x∂ on the line at an integer point"},
      {"translations", "action", {{"n", 1, 4, 2}}, "∂_1, ..., ∂_n on Q^n at the origin"},
      {"sa2_plane", "action", {}, "special affine vector fields on the plane at the origin"},
  };
  return listing;
}

CatalogEntry catalog_get(const std::string& key, const std::vector<long>& params) {
  const CatalogListing* listing = nullptr;
  for (const auto& l : catalog_list()) {
    if (l.key == key) listing = &l;
  }
  if (!listing) unknown_key(key);
  if (params.size() > listing->params.size()) {
    throw CatalogError(fmt::format("catalog key \"{}\" takes {} parameter(s), got {}", key, listing->params.size(),
                                   params.size()));
  }
  std::vector<long> p = params;
  for (std::size_t i = p.size(); i < listing->params.size(); ++i) p.push_back(listing->params[i].fallback);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& spec = listing->params[i];
    if (p[i] < spec.min || p[i] > spec.max) {
      throw CatalogError(fmt::format("catalog key \"{}\": parameter {} = {} outside {}..{}", key, spec.name, p[i],
                                     spec.min, spec.max));
    }
  }

  auto algebra = [&](LieAlgebra alg, std::string note) {
    return CatalogEntry{key, p, std::move(alg), std::move(note), std::nullopt, std::nullopt, std::nullopt};
  };
  auto pair = [&](LieAlgebra alg, Subspace stab, std::string note, bool effective, std::optional<std::size_t> ord) {
    return CatalogEntry{key, p, KleinPair(std::move(alg), std::move(stab)), std::move(note), effective, ord,
                        std::nullopt};
  };
  auto action = [&](ActionFamily fam, std::string note, bool transitive) {
    return CatalogEntry{key, p, std::move(fam), std::move(note), std::nullopt, std::nullopt, transitive};
  };

  if (key == "abelian") return algebra(abelian(std::size_t(p[0])), "every subspace is an ideal");
  if (key == "heisenberg") {
    if (p[0] % 2 == 0) throw CatalogError("heisenberg: dimension must be odd");
    return algebra(heisenberg(std::size_t(p[0])), "2-step nilpotent; center spanned by z");
  }
  if (key == "filiform") return algebra(filiform(std::size_t(p[0])), "nilpotent of maximal nil-length n-1");
  if (key == "sl2") return algebra(sl2(), "simple; Killing K(H,H) = 8, K(X,Y) = 4");
  if (key == "aff1") return algebra(aff1(), "solvable, not nilpotent");
  if (key == "sa2") return algebra(sa2(), "perfect, not semisimple; radical Q^2");
  if (key == "so3") return algebra(so3(), "compact simple; Killing form -2 I");
  if (key == "strictly_upper") return algebra(strictly_upper(std::size_t(p[0])), "nilpotent of nil-length n-1");

  if (key == "sl2_borel") {
    return pair(sl2(), span_of(3, {1, 2}), "effective; filtration sl2 ⊃ span(H,Y) ⊃ span(Y) ⊃ 0, order 2", true, 2);
  }
  if (key == "h3_e1") return pair(heisenberg(3), span_of(3, {0}), "effective; order 1", true, 1);
  if (key == "h3_center") {
    return pair(heisenberg(3), span_of(3, {2}), "not effective; the center span(e3) is an ideal", false, std::nullopt);
  }
  if (key == "aff1_e1") return pair(aff1(), span_of(2, {0}), "effective; order 1", true, 1);
  if (key == "sa2_sl2") {
    return pair(sa2(), span_of(5, {0, 1, 2}), "effective; faithful representation gives order 1", true, 1);
  }
  if (key == "so3_e3") return pair(so3(), span_of(3, {2}), "effective; compact, order 1", true, 1);
  if (key == "filiform_pairs") {
    const auto n = std::size_t(p[0]);
    const auto s = std::size_t(p[1]);
    if (s + 2 > n) throw CatalogError(fmt::format("filiform_pairs: seed {} exceeds n-2 = {}", s, long(n) - 2));
    Rows rows;
    for (std::size_t i = 1; i <= s; ++i) rows.push_back(unit_vector(n, i));
    return pair(filiform(n), Subspace::span(rows, n),
                "effective; each filtration step drops the top basis vector, order = seed", true, s);
  }

  if (key == "sl2_line") return action(sl2_line(p[0]), "projective action of sl2 on the line; r = 2", true);
  if (key == "affine_line") return action(affine_line(p[0]), "affine action on the line; r = 1", true);
  if (key == "translations") return action(translations(std::size_t(p[0])), "simply transitive; r = 0", true);
  if (key == "sa2_plane") return action(sa2_plane(), "special affine action on the plane; r = 1", true);
  unknown_key(key);
}

LieAlgebra catalog_algebra(const std::string& key, const std::vector<long>& params) {
  auto entry = catalog_get(key, params);
  if (auto* alg = std::get_if<LieAlgebra>(&entry.payload)) return *alg;
  if (auto* pair = std::get_if<KleinPair>(&entry.payload)) return pair->algebra();
  throw CatalogError("catalog key \"" + key + "\" is not an algebra");
}

KleinPair catalog_pair(const std::string& key, const std::vector<long>& params) {
  auto entry = catalog_get(key, params);
  if (auto* pair = std::get_if<KleinPair>(&entry.payload)) return *pair;
  throw CatalogError("catalog key \"" + key + "\" is not a pair");
}

ActionFamily catalog_action(const std::string& key, const std::vector<long>& params) {
  auto entry = catalog_get(key, params);
  if (auto* fam = std::get_if<ActionFamily>(&entry.payload)) return *fam;
  throw CatalogError("catalog key \"" + key + "\" is not an action");
}

}  // namespace klein
