#include "cli.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "klein/catalog.hpp"
#include "klein/checks.hpp"
#include "klein/errors.hpp"
#include "klein/filtration.hpp"
#include "klein/io.hpp"
#include "klein/jets.hpp"
#include "klein/search.hpp"
#include "klein/series.hpp"

namespace klein::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;
  std::string format = "text";
};

int emit(const Output& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) {
    err << "error: cannot write \"" << o.path << "\"\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

int emit_report(const Output& o, const Report& report, std::ostream& out, std::ostream& err) {
  const int io = emit(o, o.format == "json" ? render_json(report) : render_text(report), out, err);
  if (io != kOk) return io;
  return report.has_failure() ? kCheckFailed : kOk;
}

std::string chain_text(const std::vector<Subspace>& terms, const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " ⊇ ") + format_subspace(t, labels);
  return s;
}

Report validate_report(const LieAlgebra& alg) {
  Report r;
  const auto v = validate_algebra(alg);
  const auto& l = alg.labels();
  for (const auto& bad : v.violations) {
    r.add(fmt::format("jacobi ({}, {}, {})", l[bad.i], l[bad.j], l[bad.k]), "algebra=" + alg.name(),
          format_vector(bad.jacobiator, l), "0", Status::Fail);
  }
  r.add("jacobi", "algebra=" + alg.name(),
        fmt::format("{} triples violated", v.violations.size()), "0", v.ok ? Status::Pass : Status::Fail);
  return r;
}

Report series_report(const LieAlgebra& alg) {
  Report r;
  const auto& l = alg.labels();
  const std::string in = "algebra=" + alg.name();
  const auto lower = lower_central_series(alg);
  const auto derived = derived_series(alg);
  r.add("lower central series", in, chain_text(lower.terms, l), "", Status::Pass);
  r.add("nil-length", in,
        fmt::format("{} ({})", lower.length, lower.terminal().is_zero() ? "nilpotent" : "stabilizes at " +
                                                                                             format_subspace(lower.terminal(), l)),
        "", Status::Pass);
  r.add("derived series", in, chain_text(derived.terms, l), "", Status::Pass);
  r.add("derived length", in,
        fmt::format("{} ({})", derived.length, derived.terminal().is_zero() ? "solvable" : "stabilizes at " +
                                                                                              format_subspace(derived.terminal(), l)),
        "", Status::Pass);
  return r;
}

Report classify_report(const LieAlgebra& alg) {
  Report r;
  const std::string in = "algebra=" + alg.name();
  const auto c = classify(alg);
  const auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  r.add("nilpotent", in, yes(c.is_nilpotent), "", Status::Pass);
  r.add("solvable", in, yes(c.is_solvable), "", Status::Pass);
  r.add("perfect", in, yes(c.is_perfect), "", Status::Pass);
  r.add("nil-length", in, std::to_string(c.nil_length), "", Status::Pass);
  r.add("sol-length", in, c.sol_length ? std::to_string(*c.sol_length) : "undefined (not solvable)", "",
        Status::Pass);
  std::string k;
  for (const auto& row : killing_form(alg)) k += (k.empty() ? "" : " ") + format_tuple(row);
  r.add("killing form", in, k.empty() ? "()" : k, "", Status::Pass);
  r.add("killing rank", in, std::to_string(c.killing_rank), "", Status::Pass);
  r.add("killing signature", in,
        fmt::format("(+{}, -{}, 0x{})", c.killing_signature.positive, c.killing_signature.negative,
                    c.killing_signature.zero),
        "", Status::Pass);
  r.add("semisimple", in, yes(c.is_semisimple()), "", Status::Pass);
  r.add("compact type", in, yes(c.is_compact_type()), "", Status::Pass);
  return r;
}

Report order_report(const KleinPair& pair) {
  Report r;
  const auto& l = pair.algebra().labels();
  const std::string in =
      fmt::format("algebra={}, stabilizer={}", pair.algebra().name(), format_subspace(pair.stabilizer(), l));
  try {
    r.add("order", in, fmt::format("r = {}", order(pair)), "", Status::Pass);
  } catch (const NotEffective& e) {
    r.add("order", in, "not effective: radical " + format_subspace(e.radical(), l), "effective pair", Status::Fail);
  }
  return r;
}

Report verify_report(const std::string& which, const std::string& source) {
  if (which == "lemma8") return report_lemma8(load_algebra(source));
  if (which == "prop9") {
    auto payload = load_input(source);
    if (auto* pair = std::get_if<KleinPair>(&payload)) {
      return report_prop9(pair->algebra(), pair->stabilizer(),
                          normalizer(pair->stabilizer(), pair->algebra()));
    }
    const auto alg = load_algebra(source);
    try {
      const auto tower = lemma8_pair(alg);
      return report_prop9(alg, tower.k_sub, tower.h_sub);
    } catch (const NotApplicable& e) {
      Report r;
      r.add("prop9", "algebra=" + alg.name(), e.what(), "", Status::NotApplicable);
      return r;
    }
  }
  const auto pair = load_pair(source);
  if (which == "eq10") return report_eq10(pair);
  if (which == "prop5") return report_prop5(pair);
  if (which == "prop6") return report_prop6(pair);
  if (which == "cor7") return report_cor7(pair);
  if (which == "witness") return report_witness(pair);
  return report_second_form(pair);
}

std::vector<Scalar> parse_grid(const std::string& text) {
  const auto dots = text.find("..");
  std::vector<Scalar> grid;
  if (dots != std::string::npos) {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (lo > hi) throw MalformedInput("empty grid range " + text);
    for (long v = lo; v <= hi; ++v) grid.emplace_back(v);
    return grid;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_scalar(item));
  return grid;
}

std::string catalog_list_text(const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& l : catalog_list()) {
      Json params = Json::array();
      for (const auto& p : l.params) {
        params.push_back({{"name", p.name}, {"min", p.min}, {"max", p.max}, {"default", p.fallback}});
      }
      arr.push_back({{"key", l.key}, {"kind", l.kind}, {"params", params}, {"description", l.description}});
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& l : catalog_list()) {
    std::string params;
    for (const auto& p : l.params) {
      params += fmt::format("{}{}={}..{}", params.empty() ? "" : " ", p.name, p.min, p.max);
    }
    out += fmt::format("{:<16}{:<9}{:<18}{}\n", l.key, l.kind, params.empty() ? "-" : params, l.description);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weisfeiler filtrations and orders of Lie algebra pairs over Q", "klein"};
  app.require_subcommand(1);
  Output o;
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.path, "write the report to PATH");
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  std::string source;

  auto* validate = app.add_subcommand("validate", "check the Jacobi identity");
  validate->add_option("input", source, "algebra file or catalog:key")->required();
  add_output(validate);

  auto* series = app.add_subcommand("series", "lower central and derived series");
  series->add_option("input", source)->required();
  add_output(series);

  auto* classify_cmd = app.add_subcommand("classify", "nilpotency, solvability and Killing data");
  classify_cmd->add_option("input", source)->required();
  add_output(classify_cmd);

  auto* filtration = app.add_subcommand("filtration", "Weisfeiler filtration of a pair");
  filtration->add_option("input", source, "pair file or catalog:key")->required();
  add_output(filtration);

  auto* order_cmd = app.add_subcommand("order", "order of an effective pair");
  order_cmd->add_option("input", source)->required();
  add_output(order_cmd);

  std::string check;
  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("check", check)
      ->required()
      ->check(CLI::IsMember({"eq10", "prop5", "prop6", "cor7", "prop9", "lemma8", "witness", "second-form"}));
  verify->add_option("input", source)->required();
  add_output(verify);

  std::string jets_mode;
  std::size_t k_max = 0;
  auto* jets = app.add_subcommand("jets", "jet filtration of a polynomial action");
  jets->add_option("mode", jets_mode)->required()->check(CLI::IsMember({"filtration", "prop4", "derive"}));
  jets->add_option("input", source, "action file or catalog:key")->required();
  jets->add_option("--k-max", k_max, "highest jet order (default 2m)");
  add_output(jets);

  std::string stab_dims = "1,2";
  std::string grid_text = "-2..2";
  std::size_t cap = 1'000'000;
  std::size_t workers = 1;
  std::size_t top = 50;
  auto* search = app.add_subcommand("search", "enumerate stabilizers and rank pairs by order");
  search->add_option("--algebra", source, "algebra file or catalog:key")->required();
  search->add_option("--stab-dim", stab_dims, "comma-separated stabilizer dimensions");
  search->add_option("--grid", grid_text, "lo..hi or comma-separated rationals");
  search->add_option("--cap", cap, "maximum candidates examined");
  search->add_option("--workers", workers, "evaluation threads");
  search->add_option("--top", top, "hits listed in the report (0 = all)");
  add_output(search);

  auto* catalog = app.add_subcommand("catalog", "built-in algebras, pairs and actions");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog keys");
  add_output(list);
  std::string key;
  std::vector<long> params;
  auto* emit_cmd = catalog->add_subcommand("emit", "write a catalog entry in the file format");
  emit_cmd->add_option("key", key)->required();
  emit_cmd->add_option("params", params);
  emit_cmd->add_option("--out", o.path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (validate->parsed()) return emit_report(o, validate_report(load_algebra(source)), out, err);
    if (series->parsed()) return emit_report(o, series_report(load_algebra(source)), out, err);
    if (classify_cmd->parsed()) return emit_report(o, classify_report(load_algebra(source)), out, err);
    if (filtration->parsed()) return emit_report(o, report_filtration(load_pair(source)), out, err);
    if (order_cmd->parsed()) return emit_report(o, order_report(load_pair(source)), out, err);
    if (verify->parsed()) return emit_report(o, verify_report(check, source), out, err);
    if (jets->parsed()) {
      const auto fam = load_action(source);
      const std::size_t kmax = k_max > 0 ? k_max : 2 * fam.generators().size();
      if (jets_mode == "filtration") return emit_report(o, report_jet_filtration(fam, kmax), out, err);
      if (jets_mode == "prop4") return emit_report(o, report_prop4(fam, kmax), out, err);
      const auto derived = structure_constants_from_fields(fam, "derived");
      if (o.format == "json") return emit(o, to_json(derived.algebra).dump(2) + "\n", out, err);
      Report r;
      const auto& l = derived.algebra.labels();
      for (const auto& [ij, v] : derived.expansion) {
        r.add(fmt::format("[{}, {}]", l[ij.first], l[ij.second]), "", format_vector(v, l), "", Status::Pass);
      }
      const auto valid = validate_algebra(derived.algebra);
      r.add("jacobi", "", valid.ok ? "holds" : "violated", "holds", valid.ok ? Status::Pass : Status::Fail);
      return emit_report(o, r, out, err);
    }
    if (search->parsed()) {
      SearchConfig cfg;
      cfg.algebra = load_algebra(source);
      cfg.stab_dims.clear();
      std::stringstream ss(stab_dims);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.stab_dims.push_back(std::stoul(item));
      cfg.coeff_grid = parse_grid(grid_text);
      cfg.candidate_cap = cap;
      cfg.workers = workers;
      const auto result = search_max_order(cfg);
      const auto text =
          o.format == "json" ? search_report_json(cfg, result, top) : search_report_text(cfg, result, top);
      const int io = emit(o, text, out, err);
      if (io != kOk) return io;
      return result.violations.total() > 0 ? kCheckFailed : kOk;
    }
    if (list->parsed()) return emit(o, catalog_list_text(o.format), out, err);
    if (emit_cmd->parsed()) {
      const auto entry = catalog_get(key, params);
      const auto json = std::visit([](const auto& payload) { return to_json(payload); }, entry.payload);
      return emit(o, json.dump(2) + "\n", out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace klein::cli
