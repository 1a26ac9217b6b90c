#include "klein/series.hpp"

#include "klein/errors.hpp"
#include "klein/linalg.hpp"

namespace klein {

namespace {

template <typename Step>
SeriesChain iterate_series(SeriesKind kind, Subspace start, Step step) {
  SeriesChain chain{kind, {std::move(start)}, 0};
  for (;;) {
    Subspace next = step(chain.terms.back());
    if (next == chain.terms.back()) break;
    chain.terms.push_back(std::move(next));
  }
  chain.length = chain.terms.size() - 1;
  return chain;
}

}  // namespace

SeriesChain lower_central_series(const Subspace& sub, const LieAlgebra& alg) {
  return iterate_series(SeriesKind::LowerCentral, sub,
                        [&](const Subspace& t) { return bracket_span(t, sub, alg); });
}

SeriesChain lower_central_series(const LieAlgebra& alg) {
  return lower_central_series(Subspace::whole(alg.dim()), alg);
}

SeriesChain derived_series(const Subspace& sub, const LieAlgebra& alg) {
  return iterate_series(SeriesKind::Derived, sub,
                        [&](const Subspace& t) { return bracket_span(t, t, alg); });
}

SeriesChain derived_series(const LieAlgebra& alg) { return derived_series(Subspace::whole(alg.dim()), alg); }

Rows killing_form(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Rows> ad;
  ad.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ad.push_back(alg.ad_matrix(unit_vector(n, i)));
  Rows k(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar trace;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(ad[i][r][c]) != 0 && sgn(ad[j][c][r]) != 0) trace += ad[i][r][c] * ad[j][c][r];
        }
      }
      k[i][j] = trace;
      k[j][i] = trace;
    }
  }
  return k;
}

Inertia inertia(Rows a) {
  const std::size_t n = a.size();
  Inertia result;
  std::size_t done = 0;
  // Each pass eliminates one index (or two after a rotation) from the
  // trailing block a[done.., done..].
  while (done < n) {
    std::size_t p = done;
    while (p < n && sgn(a[p][p]) == 0) ++p;
    if (p == n) {
      // No nonzero diagonal: look for an off-diagonal entry and make a
      // nonzero diagonal by adding row/column j to row/column i.
      std::size_t pi = n, pj = n;
      for (std::size_t i = done; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        result.zero += n - done;
        break;
      }
      // a_ii' = a_ii + 2 a_ij + a_jj = 2 a_ij != 0
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }
    std::swap(a[done], a[p]);
    for (auto& row : a) std::swap(row[done], row[p]);
    const Scalar pivot = a[done][done];
    (sgn(pivot) > 0 ? result.positive : result.negative) += 1;
    // Schur complement of the pivot; stays symmetric.
    for (std::size_t r = done + 1; r < n; ++r) {
      if (sgn(a[r][done]) == 0) continue;
      const Scalar f = a[r][done] / pivot;
      for (std::size_t c = done + 1; c < n; ++c) a[r][c] -= f * a[done][c];
    }
    for (std::size_t r = done + 1; r < n; ++r) {
      a[r][done] = 0;
      a[done][r] = 0;
    }
    ++done;
  }
  return result;
}

Classification classify(const LieAlgebra& alg) {
  Classification c;
  const auto lower = lower_central_series(alg);
  const auto derived = derived_series(alg);
  c.nil_length = lower.length;
  c.is_nilpotent = lower.terminal().is_zero();
  c.is_solvable = derived.terminal().is_zero();
  c.is_perfect = lower.length == 0;
  if (c.is_solvable) c.sol_length = derived.length;
  const auto k = killing_form(alg);
  c.killing_rank = rank(k, alg.dim());
  c.killing_signature = inertia(k);
  return c;
}

}  // namespace klein
