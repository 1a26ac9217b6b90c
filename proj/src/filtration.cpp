#include "klein/filtration.hpp"

#include "klein/linalg.hpp"

namespace klein {

Filtration weisfeiler_filtration(const KleinPair& pair) {
  const auto& alg = pair.algebra();
  const auto whole = Subspace::whole(alg.dim());
  Filtration f;
  f.terms = {whole, pair.stabilizer()};
  for (;;) {
    const Subspace& current = f.terms.back();
    Subspace next = transporter(current, whole, current, alg);
    if (next == current) break;
    f.terms.push_back(std::move(next));
  }
  f.stabilization_index = f.terms.size() - 2;
  return f;
}

Subspace effectivity_radical(const KleinPair& pair) {
  const auto& alg = pair.algebra();
  const std::size_t n = alg.dim();
  // Grow D = ann(g_0) under f -> f ∘ ad(e_c) until closed; the ideal is
  // the common kernel of D.
  std::vector<Rows> ad;
  for (std::size_t c = 0; c < n; ++c) ad.push_back(alg.ad_matrix(unit_vector(n, c)));
  Subspace dual = Subspace::span(pair.stabilizer().annihilator(), n);
  Rows frontier = dual.basis();
  while (!frontier.empty() && !dual.is_whole()) {
    Rows images;
    for (const auto& f : frontier) {
      for (std::size_t c = 0; c < n; ++c) {
        // (f ∘ ad e_c)_j = sum_r f_r ad_c[r][j]
        Vector g(n);
        for (std::size_t r = 0; r < n; ++r) {
          if (sgn(f[r]) != 0) axpy(g, f[r], ad[c][r]);
        }
        if (!dual.contains(g)) images.push_back(std::move(g));
      }
    }
    Rows all = dual.basis();
    all.insert(all.end(), images.begin(), images.end());
    Subspace grown = Subspace::span(all, n);
    frontier.clear();
    if (grown.dim() > dual.dim()) frontier = grown.basis();
    dual = std::move(grown);
  }
  return Subspace::span(kernel(dual.basis(), n), n);
}

bool is_effective(const KleinPair& pair) { return effectivity_radical(pair).is_zero(); }

std::size_t order(const Filtration& filtration) {
  if (!filtration.terminal().is_zero()) {
    throw NotEffective("pair is not effective: stabilizer contains a nonzero ideal", filtration.terminal());
  }
  return filtration.stabilization_index;
}

std::size_t order(const KleinPair& pair) { return order(weisfeiler_filtration(pair)); }

}  // namespace klein
