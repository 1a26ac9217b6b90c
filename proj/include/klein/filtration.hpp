#pragma once

#include <cstddef>
#include <vector>

#include "klein/errors.hpp"
#include "klein/lie_algebra.hpp"
#include "klein/subspace.hpp"

namespace klein {

/// Descending chain g = F_{-1} ⊇ F_0 ⊇ F_1 ⊇ ... stored as
/// terms = [F_{-1}, F_0, ..., F_s] where s = stabilization_index is the
/// first k >= 0 with F_k == F_{k+1}. Strictly decreasing from F_0 to F_s.
struct Filtration {
  std::vector<Subspace> terms;
  std::size_t stabilization_index = 0;

  const Subspace& terminal() const { return terms.back(); }
  /// F_k for k >= -1; the stable term repeats past the stabilization index.
  const Subspace& term(long k) const {
    const auto idx = static_cast<std::size_t>(k + 1);
    return idx < terms.size() ? terms[idx] : terms.back();
  }
};

/// F_0 = g_0, F_{k+1} = {x in F_k : [x, g] ⊆ F_k}. The terminal is the
/// largest ideal of g inside g_0.
Filtration weisfeiler_filtration(const KleinPair& pair);

/// Largest ideal of g contained in g_0, computed in the dual: the
/// annihilator of the smallest coadjoint-invariant subspace of g* that
/// contains ann(g_0). Shares no code path with weisfeiler_filtration.
Subspace effectivity_radical(const KleinPair& pair);

bool is_effective(const KleinPair& pair);

class NotEffective : public Error {
 public:
  NotEffective(std::string what, Subspace radical) : Error(std::move(what)), radical_(std::move(radical)) {}
  const Subspace& radical() const { return radical_; }

 private:
  Subspace radical_;
};

/// Smallest r with F_r = 0. Throws NotEffective carrying the radical.
std::size_t order(const KleinPair& pair);
/// Same, from an already computed filtration of `pair`.
std::size_t order(const Filtration& filtration);

}  // namespace klein
