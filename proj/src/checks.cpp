#include "klein/checks.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace klein {

namespace {

bool contains_properly(const Subspace& big, const Subspace& small) {
  return big.contains(small) && big.dim() > small.dim();
}

std::string describe(const KleinPair& pair) {
  return fmt::format("algebra={}, stabilizer={}", pair.algebra().name(),
                     format_subspace(pair.stabilizer(), pair.algebra().labels()));
}

std::string status_word(bool ok) { return ok ? "holds" : "violated"; }

}  // namespace

std::vector<SecondFormRow> check_second_form(const KleinPair& pair) {
  const auto f = weisfeiler_filtration(pair);
  order(f);
  const auto& alg = pair.algebra();
  const auto whole = Subspace::whole(alg.dim());
  std::vector<SecondFormRow> rows;
  for (std::size_t k = 0; k <= f.stabilization_index; ++k) {
    SecondFormRow row;
    row.k = k;
    row.next_term = f.term(static_cast<long>(k) + 1);
    row.second_form = transporter(whole, whole, f.term(static_cast<long>(k)), alg);
    row.agree = row.next_term == row.second_form;
    rows.push_back(std::move(row));
  }
  return rows;
}

Eq10Result verify_eq10(const KleinPair& pair, const Filtration& f) {
  const auto& alg = pair.algebra();
  Eq10Result result;
  const auto s = static_cast<long>(f.stabilization_index);
  for (long i = 0; i <= s; ++i) {
    for (long j = i; j <= s; ++j) {
      ++result.pairs_checked;
      auto lhs = bracket_span(f.term(i), f.term(j), alg);
      const auto& rhs = f.term(i + j);
      if (!rhs.contains(lhs)) result.violations.push_back({std::size_t(i), std::size_t(j), std::move(lhs), rhs});
    }
  }
  result.f1_nilpotent = lower_central_series(f.term(1), alg).terminal().is_zero();
  result.f1_applicable = f.terminal().is_zero();
  return result;
}

Eq10Result verify_eq10(const KleinPair& pair) { return verify_eq10(pair, weisfeiler_filtration(pair)); }

Prop6Result verify_prop6(const KleinPair& pair) {
  Prop6Result result;
  result.order = order(pair);
  if (result.order == 0) throw NotApplicable("order 0: stabilizer is zero");
  const auto lower = lower_central_series(pair.algebra());
  result.lower_central_term = lower.term(result.order - 1);
  result.intersection = span_intersect(pair.stabilizer(), result.lower_central_term);
  return result;
}

Cor7Result verify_cor7(const KleinPair& pair) {
  const auto lower = lower_central_series(pair.algebra());
  if (!lower.terminal().is_zero()) throw NotApplicable("algebra is not nilpotent");
  Cor7Result result;
  result.order = order(pair);
  result.nil_length = lower.length;
  return result;
}

std::optional<std::string> NormalityConditions::first_failure() const {
  if (!k_proper_in_h) return "k is a proper subspace of h";
  if (!h_proper_in_g) return "h is a proper subspace of g";
  if (!k_normal_in_h) return "k is normal in h";
  if (!h_normal_in_g) return "h is normal in g";
  if (!k_not_normal_in_g) return "k is not normal in g";
  return std::nullopt;
}

NormalityConditions check_normality(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub) {
  const auto whole = Subspace::whole(alg.dim());
  NormalityConditions c;
  c.k_proper_in_h = contains_properly(h_sub, k_sub);
  c.h_proper_in_g = contains_properly(whole, h_sub);
  c.k_normal_in_h = k_sub.contains(bracket_span(h_sub, k_sub, alg));
  c.h_normal_in_g = h_sub.contains(bracket_span(whole, h_sub, alg));
  c.k_not_normal_in_g = !k_sub.contains(bracket_span(whole, k_sub, alg));
  return c;
}

namespace {

void require_lemma8_hypotheses(const LieAlgebra& alg) {
  if (alg.dim() < 2) throw NotApplicable("dimension < 2");
  const auto whole = Subspace::whole(alg.dim());
  if (bracket_span(whole, whole, alg).is_zero()) throw NotApplicable("algebra is abelian");
  if (!lower_central_series(alg).terminal().is_zero()) throw NotApplicable("algebra is not nilpotent");
}

NormalizerTower build_tower(const Vector& seed, const LieAlgebra& alg) {
  const auto line = Subspace::span({seed}, alg.dim());
  if (line.is_zero()) throw BadSeed("seed is zero");
  NormalizerTower tower;
  tower.seed = seed;
  tower.chain.push_back(line);
  while (!tower.chain.back().is_whole()) {
    auto next = normalizer(tower.chain.back(), alg);
    if (next == tower.chain.back()) throw Error("normalizer tower stalled below g");
    tower.chain.push_back(std::move(next));
  }
  if (tower.chain.size() < 3) {
    throw BadSeed("span of " + format_vector(seed, alg.labels()) + " is an ideal");
  }
  const std::size_t k = tower.chain.size() - 1;
  tower.k_sub = tower.chain[k - 2];
  tower.h_sub = tower.chain[k - 1];
  return tower;
}

}  // namespace

NormalizerTower normalizer_tower(const Vector& seed, const LieAlgebra& alg) {
  require_lemma8_hypotheses(alg);
  if (seed.size() != alg.dim()) throw MalformedInput("seed has wrong length");
  auto tower = build_tower(seed, alg);
  if (auto failed = check_normality(alg, tower.k_sub, tower.h_sub).first_failure()) {
    throw Error("normalizer tower produced a pair violating: " + *failed);
  }
  return tower;
}

NormalizerTower lemma8_pair(const LieAlgebra& alg) {
  require_lemma8_hypotheses(alg);
  const std::size_t n = alg.dim();
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) seeds.push_back(unit_vector(n, i) + unit_vector(n, j));
  }
  for (const auto& seed : seeds) {
    const auto line = Subspace::span({seed}, n);
    if (!is_ideal(line, alg)) return normalizer_tower(seed, alg);
  }
  // Unreachable for nonabelian algebras: some line is not an ideal.
  throw NotApplicable("every scanned seed spans an ideal");
}

bool Prop9Result::inclusions_hold() const {
  return std::all_of(inclusions.begin(), inclusions.end(), [](const auto& r) { return r.holds; });
}

Prop9Result verify_prop9(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub) {
  if (!lower_central_series(alg).terminal().is_zero()) throw NotApplicable("algebra is not nilpotent");
  if (auto failed = check_normality(alg, k_sub, h_sub).first_failure()) {
    throw NotApplicable("hypothesis fails: " + *failed);
  }
  const KleinPair pair(alg, k_sub);
  const auto f = weisfeiler_filtration(pair);
  Prop9Result result;
  result.order = order(f);
  const auto derived = derived_series(k_sub, alg);
  result.sol_length = derived.length;
  const std::size_t last = std::max(derived.length, f.stabilization_index);
  for (std::size_t i = 0; i <= last; ++i) {
    InclusionRow row;
    row.i = i;
    row.derived_term = derived.term(i);
    row.filtration_term = f.term(static_cast<long>(i));
    row.holds = row.filtration_term.contains(row.derived_term);
    result.inclusions.push_back(std::move(row));
  }
  return result;
}

WitnessChain witness_chain(const KleinPair& pair) {
  const auto& alg = pair.algebra();
  const std::size_t n = alg.dim();
  const auto f = weisfeiler_filtration(pair);
  WitnessChain w;
  w.order = order(f);
  const long r = static_cast<long>(w.order);
  if (r == 0) throw NotApplicable("order 0: stabilizer is zero");

  w.a = f.term(r - 1).basis().front();
  w.values.push_back(w.a);
  const auto whole = Subspace::whole(n);
  for (long i = 1; i <= r; ++i) {
    const Vector& current = w.values.back();
    const Subspace& layer = f.term(r - i);
    std::optional<Vector> x;
    for (std::size_t c = 0; c < n && !x; ++c) {
      auto e = unit_vector(n, c);
      if (!layer.contains(alg.bracket(e, current))) x = std::move(e);
    }
    if (x) {
      ++w.basis_hits;
    } else {
      // Solve for the elements keeping `current` inside the layer; any
      // vector outside that solution space is a witness.
      const auto keep = transporter(whole, Subspace::span({current}, n), layer, alg);
      for (std::size_t c = 0; c < n && !x; ++c) {
        auto reduced = keep.reduce(unit_vector(n, c));
        if (!is_zero(reduced)) x = std::move(reduced);
      }
      if (!x) throw Error("witness chain: value is not in the expected filtration layer");
    }
    w.values.push_back(alg.bracket(*x, current));
    w.xs.push_back(std::move(*x));
  }

  w.xs_outside_stabilizer = std::none_of(w.xs.begin(), w.xs.end(),
                                         [&](const Vector& x) { return pair.stabilizer().contains(x); });
  w.values_in_layers = true;
  for (long i = 0; i <= r; ++i) {
    const auto& v = w.values[static_cast<std::size_t>(i)];
    if (!f.term(r - i - 1).contains(v) || f.term(r - i).contains(v)) w.values_in_layers = false;
  }
  const auto& last_inside = w.values[static_cast<std::size_t>(r - 1)];
  const auto lower = lower_central_series(alg);
  w.eq12_membership = !is_zero(last_inside) && pair.stabilizer().contains(last_inside) &&
                      lower.term(static_cast<std::size_t>(r - 1)).contains(last_inside);
  return w;
}

Prop5Result verify_prop5(const KleinPair& pair) {
  Prop5Result result;
  result.order = order(pair);
  if (pair.stabilizer().is_zero()) throw NotApplicable("stabilizer is zero");
  const auto cls_g = classify(pair.algebra());
  const auto cls_g0 = classify(restrict_to(pair.stabilizer(), pair.algebra()));
  result.algebra_semisimple = cls_g.is_semisimple();
  result.algebra_compact = cls_g.is_compact_type();
  result.stabilizer_semisimple = cls_g0.is_semisimple();
  result.stabilizer_compact = cls_g0.is_compact_type();
  if (result.stabilizer_semisimple || result.stabilizer_compact) {
    result.stabilizer_clause = result.order == 1 ? Status::Pass : Status::Fail;
  }
  if (result.algebra_semisimple || result.algebra_compact) {
    result.algebra_clause = result.order == 1 ? Status::Pass : Status::Finding;
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Body>
Report guarded(const std::string& check, const std::string& inputs, Body body) {
  Report report;
  try {
    body(report);
  } catch (const NotEffective& e) {
    report.add(check, inputs, std::string(e.what()) + "; radical dim " + std::to_string(e.radical().dim()),
               "effective pair", Status::Fail);
  } catch (const NotApplicable& e) {
    report.add(check, inputs, e.what(), "", Status::NotApplicable);
  } catch (const BadSeed& e) {
    report.add(check, inputs, e.what(), "", Status::NotApplicable);
  }
  return report;
}

}  // namespace

Report report_filtration(const KleinPair& pair) {
  const auto& labels = pair.algebra().labels();
  const auto f = weisfeiler_filtration(pair);
  Report report;
  const auto inputs = describe(pair);
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    const long k = static_cast<long>(t) - 1;
    report.add(fmt::format("F_{}", k), inputs,
               fmt::format("dim {}: {}", f.terms[t].dim(), format_subspace(f.terms[t], labels)), "", Status::Pass);
  }
  if (f.terminal().is_zero()) {
    report.add("order", inputs, fmt::format("r = {}", f.stabilization_index), "", Status::Pass);
  } else {
    report.add("order", inputs,
               fmt::format("not effective: stabilizes at F_{} = {}", f.stabilization_index,
                           format_subspace(f.terminal(), labels)),
               "", Status::Finding);
  }
  return report;
}

Report report_second_form(const KleinPair& pair) {
  const auto& labels = pair.algebra().labels();
  const auto inputs = describe(pair);
  return guarded("second-form", inputs, [&](Report& report) {
    for (const auto& row : check_second_form(pair)) {
      report.add(fmt::format("second-form k={}", row.k), inputs,
                 fmt::format("{{x in g : [x,g] ⊆ F_{}}} = {}", row.k, format_subspace(row.second_form, labels)),
                 fmt::format("F_{} = {}", row.k + 1, format_subspace(row.next_term, labels)),
                 row.agree ? Status::Pass : Status::Finding);
    }
  });
}

Report report_eq10(const KleinPair& pair) {
  const auto& labels = pair.algebra().labels();
  const auto inputs = describe(pair);
  Report report;
  const auto result = verify_eq10(pair);
  for (const auto& v : result.violations) {
    report.add(fmt::format("eq10 [F_{},F_{}]", v.i, v.j), inputs, format_subspace(v.bracket, labels),
               fmt::format("⊆ F_{} = {}", v.i + v.j, format_subspace(v.target, labels)), Status::Fail);
  }
  report.add("eq10 [F_i,F_j] ⊆ F_{i+j}", inputs,
             fmt::format("{} pairs checked, {} violations", result.pairs_checked, result.violations.size()),
             "0 violations", result.violations.empty() ? Status::Pass : Status::Fail);
  const auto f1_status =
      !result.f1_applicable ? Status::NotApplicable : result.f1_nilpotent ? Status::Pass : Status::Fail;
  report.add("eq10 F_1 nilpotent", inputs, result.f1_nilpotent ? "nilpotent" : "not nilpotent",
             result.f1_applicable ? "nilpotent" : "nilpotent (effective pairs only)", f1_status);
  return report;
}

Report report_prop5(const KleinPair& pair) {
  const auto inputs = describe(pair);
  return guarded("prop5", inputs, [&](Report& report) {
    const auto r = verify_prop5(pair);
    const auto flags = [](bool ss, bool compact) {
      return fmt::format("semisimple={}, compact-type={}", ss ? "yes" : "no", compact ? "yes" : "no");
    };
    report.add("prop5 stabilizer clause", inputs,
               fmt::format("{}; order {}", flags(r.stabilizer_semisimple, r.stabilizer_compact), r.order),
               r.stabilizer_clause == Status::NotApplicable ? "" : "order 1", r.stabilizer_clause);
    report.add("prop5 algebra clause", inputs,
               fmt::format("{}; order {}", flags(r.algebra_semisimple, r.algebra_compact), r.order),
               r.algebra_clause == Status::NotApplicable ? "" : "order 1", r.algebra_clause);
  });
}

Report report_prop6(const KleinPair& pair) {
  const auto& labels = pair.algebra().labels();
  const auto inputs = describe(pair);
  return guarded("prop6", inputs, [&](Report& report) {
    const auto r = verify_prop6(pair);
    report.add("prop6 g_0 ∩ g_(r-1)", inputs,
               fmt::format("r = {}, g_({}) = {}, intersection = {} (dim {})", r.order, r.order - 1,
                           format_subspace(r.lower_central_term, labels), format_subspace(r.intersection, labels),
                           r.intersection.dim()),
               "dim >= 1", r.pass() ? Status::Pass : Status::Fail);
  });
}

Report report_cor7(const KleinPair& pair) {
  const auto inputs = describe(pair);
  return guarded("cor7", inputs, [&](Report& report) {
    const auto r = verify_cor7(pair);
    report.add("cor7 order <= n(g)+1", inputs, fmt::format("order {}, nil-length {}", r.order, r.nil_length),
               fmt::format("order <= {}", r.nil_length + 1), r.pass() ? Status::Pass : Status::Fail);
  });
}

Report report_witness(const KleinPair& pair) {
  const auto& labels = pair.algebra().labels();
  const auto inputs = describe(pair);
  return guarded("witness", inputs, [&](Report& report) {
    const auto w = witness_chain(pair);
    std::string xs;
    for (const auto& x : w.xs) xs += (xs.empty() ? "" : ", ") + format_vector(x, labels);
    std::string values;
    for (const auto& v : w.values) values += (values.empty() ? "" : " -> ") + format_vector(v, labels);
    report.add("witness sequence", inputs, fmt::format("a = {}; x = ({}); {}", format_vector(w.a, labels), xs, values),
               "", Status::Pass);
    report.add("witness property (1) x_i in g \\ g_0", inputs, status_word(w.xs_outside_stabilizer), "holds",
               w.xs_outside_stabilizer ? Status::Pass : Status::Fail);
    report.add("witness property (2) layers", inputs, status_word(w.values_in_layers), "holds",
               w.values_in_layers ? Status::Pass : Status::Fail);
    report.add("witness eq12 membership", inputs,
               fmt::format("{} in g_0 ∩ g_({}): {}", format_vector(w.values[w.order - 1], labels), w.order - 1,
                           status_word(w.eq12_membership)),
               "holds", w.eq12_membership ? Status::Pass : Status::Fail);
  });
}

Report report_lemma8(const LieAlgebra& alg) {
  const auto& labels = alg.labels();
  const auto inputs = "algebra=" + alg.name();
  return guarded("lemma8", inputs, [&](Report& report) {
    const auto tower = lemma8_pair(alg);
    std::string chain;
    for (const auto& s : tower.chain) chain += (chain.empty() ? "" : " ⊊ ") + format_subspace(s, labels);
    report.add("lemma8 tower", inputs, fmt::format("seed {}: {}", format_vector(tower.seed, labels), chain), "",
               Status::Pass);
    const auto c = check_normality(alg, tower.k_sub, tower.h_sub);
    report.add("lemma8 pair", inputs,
               fmt::format("k = {}, h = {}", format_subspace(tower.k_sub, labels), format_subspace(tower.h_sub, labels)),
               "", Status::Pass);
    const auto failed = c.first_failure();
    report.add("lemma8 conditions", inputs, failed ? "fails: " + *failed : "all hold",
               "k ⊊ h ⊊ g, k ◁ h, h ◁ g, k not ◁ g", failed ? Status::Fail : Status::Pass);
  });
}

Report report_prop9(const LieAlgebra& alg, const Subspace& k_sub, const Subspace& h_sub) {
  const auto& labels = alg.labels();
  const auto inputs =
      fmt::format("algebra={}, k={}, h={}", alg.name(), format_subspace(k_sub, labels), format_subspace(h_sub, labels));
  return guarded("prop9", inputs, [&](Report& report) {
    const auto r = verify_prop9(alg, k_sub, h_sub);
    for (const auto& row : r.inclusions) {
      report.add(fmt::format("prop9 k^({}) ⊆ k_{}", row.i, row.i), inputs,
                 fmt::format("{} ⊆ {}", format_subspace(row.derived_term, labels),
                             format_subspace(row.filtration_term, labels)),
                 "holds", row.holds ? Status::Pass : Status::Fail);
    }
    report.add("prop9 order >= s(k)", inputs, fmt::format("order {}, s(k) = {}", r.order, r.sol_length),
               fmt::format("order >= {}", r.sol_length), r.order >= r.sol_length ? Status::Pass : Status::Fail);
  });
}

}  // namespace klein
