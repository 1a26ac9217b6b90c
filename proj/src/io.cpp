#include "klein/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "klein/errors.hpp"

namespace klein {

namespace {

void reject_unknown(const Json& doc, const std::set<std::string>& allowed, const char* what) {
  if (!doc.is_object()) throw MalformedInput(std::string(what) + " must be a JSON object");
  for (const auto& item : doc.items()) {
    if (!allowed.count(item.key())) {
      throw MalformedInput(std::string("unknown field \"") + item.key() + "\" in " + what);
    }
  }
}

const Json& field(const Json& doc, const char* name, const char* what) {
  if (!doc.contains(name)) throw MalformedInput(std::string("missing field \"") + name + "\" in " + what);
  return doc.at(name);
}

std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw MalformedInput(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Scalar as_scalar(const Json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump(), 10));
  throw MalformedInput("rational must be a string \"p\" or \"p/q\" or an integer, got " + v.dump());
}

Vector as_vector(const Json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) {
    throw MalformedInput(std::string(what) + " must be an array of " + std::to_string(n) + " rationals");
  }
  Vector out;
  for (const auto& x : v) out.push_back(as_scalar(x));
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

LieAlgebra algebra_fields(const Json& doc, const char* what) {
  const auto& name = field(doc, "name", what);
  if (!name.is_string()) throw MalformedInput("\"name\" must be a string");
  const std::size_t dim = as_index(field(doc, "dim", what), "\"dim\"");
  const auto& basis = field(doc, "basis", what);
  if (!basis.is_array() || basis.size() != dim) {
    throw MalformedInput("\"basis\" must list " + std::to_string(dim) + " labels");
  }
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw MalformedInput("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const auto& brackets = field(doc, "brackets", what);
  if (!brackets.is_array()) throw MalformedInput("\"brackets\" must be an array");
  BracketTable table;
  for (const auto& entry : brackets) {
    reject_unknown(entry, {"i", "j", "v"}, "bracket entry");
    const std::size_t i = as_index(field(entry, "i", "bracket entry"), "\"i\"");
    const std::size_t j = as_index(field(entry, "j", "bracket entry"), "\"j\"");
    if (i >= j || j >= dim) {
      throw MalformedInput("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") must satisfy i < j < dim");
    }
    auto v = as_vector(field(entry, "v", "bracket entry"), dim, "bracket value \"v\"");
    if (!table.emplace(std::pair{i, j}, std::move(v)).second) {
      throw MalformedInput("duplicate bracket entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return LieAlgebra(name.get<std::string>(), std::move(labels), std::move(table));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace

Json scalar_to_json(const Scalar& x) { return format_scalar(x); }

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& r : s.basis()) rows.push_back(vector_to_json(r));
  return rows;
}

LieAlgebra algebra_from_json(const Json& doc) {
  reject_unknown(doc, {"name", "dim", "basis", "brackets"}, "algebra file");
  return algebra_fields(doc, "algebra file");
}

KleinPair pair_from_json(const Json& doc) {
  reject_unknown(doc, {"name", "dim", "basis", "brackets", "stabilizer"}, "pair file");
  auto alg = algebra_fields(doc, "pair file");
  const auto& stab = field(doc, "stabilizer", "pair file");
  if (!stab.is_array()) throw MalformedInput("\"stabilizer\" must be an array of vectors");
  Rows rows;
  for (const auto& r : stab) rows.push_back(as_vector(r, alg.dim(), "stabilizer row"));
  auto sub = Subspace::span(rows, alg.dim());
  return KleinPair(std::move(alg), std::move(sub));
}

ActionFamily action_from_json(const Json& doc) {
  reject_unknown(doc, {"vars", "point", "fields"}, "action file");
  const std::size_t n = as_index(field(doc, "vars", "action file"), "\"vars\"");
  auto point = as_vector(field(doc, "point", "action file"), n, "\"point\"");
  const auto& fields = field(doc, "fields", "action file");
  if (!fields.is_array()) throw MalformedInput("\"fields\" must be an array");
  std::vector<PolyVectorField> gens;
  for (const auto& f : fields) {
    if (!f.is_array() || f.size() != n) {
      throw MalformedInput("each field must list " + std::to_string(n) + " components");
    }
    std::vector<Polynomial> comps;
    for (const auto& comp : f) {
      if (!comp.is_array()) throw MalformedInput("a field component must be an array of terms");
      Polynomial p(n);
      for (const auto& term : comp) {
        reject_unknown(term, {"coef", "exps"}, "polynomial term");
        const auto& exps = field(term, "exps", "polynomial term");
        if (!exps.is_array() || exps.size() != n) {
          throw MalformedInput("\"exps\" must list " + std::to_string(n) + " exponents");
        }
        Exponents e;
        for (const auto& x : exps) e.push_back(static_cast<unsigned>(as_index(x, "exponent")));
        p.add_term(as_scalar(field(term, "coef", "polynomial term")), e);
      }
      comps.push_back(std::move(p));
    }
    gens.emplace_back(std::move(comps));
  }
  return ActionFamily(n, std::move(gens), std::move(point));
}

Json to_json(const LieAlgebra& alg) {
  Json brackets = Json::array();
  for (const auto& [key, v] : alg.brackets()) {
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"v", vector_to_json(v)}});
  }
  return Json{{"name", alg.name()}, {"dim", alg.dim()}, {"basis", alg.labels()}, {"brackets", brackets}};
}

Json to_json(const KleinPair& pair) {
  Json doc = to_json(pair.algebra());
  doc["stabilizer"] = subspace_to_json(pair.stabilizer());
  return doc;
}

Json to_json(const ActionFamily& fam) {
  Json fields = Json::array();
  for (const auto& g : fam.generators()) {
    Json comps = Json::array();
    for (const auto& c : g.components()) {
      Json terms = Json::array();
      for (const auto& [e, coef] : c.terms()) terms.push_back({{"coef", scalar_to_json(coef)}, {"exps", e}});
      comps.push_back(std::move(terms));
    }
    fields.push_back(std::move(comps));
  }
  return Json{{"vars", fam.num_vars()}, {"point", vector_to_json(fam.base_point())}, {"fields", fields}};
}

CatalogPayload load_input(const std::string& source) {
  constexpr std::string_view scheme = "catalog:";
  if (source.rfind(scheme, 0) == 0) {
    const std::string rest = source.substr(scheme.size());
    const auto colon = rest.find(':');
    const std::string key = rest.substr(0, colon);
    std::vector<long> params;
    if (colon != std::string::npos) {
      std::stringstream ss(rest.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          params.push_back(std::stol(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw MalformedInput("bad catalog parameter \"" + item + "\" in " + source);
        }
      }
    }
    return catalog_get(key, params).payload;
  }
  const Json doc = read_json_file(source);
  if (doc.is_object() && doc.contains("stabilizer")) return pair_from_json(doc);
  if (doc.is_object() && doc.contains("vars")) return action_from_json(doc);
  return algebra_from_json(doc);
}

LieAlgebra load_algebra(const std::string& source) {
  auto payload = load_input(source);
  if (auto* alg = std::get_if<LieAlgebra>(&payload)) return *alg;
  if (auto* pair = std::get_if<KleinPair>(&payload)) return pair->algebra();
  throw MalformedInput("\"" + source + "\" is not an algebra");
}

KleinPair load_pair(const std::string& source) {
  auto payload = load_input(source);
  if (auto* pair = std::get_if<KleinPair>(&payload)) return *pair;
  throw MalformedInput("\"" + source + "\" is not a pair (no stabilizer)");
}

ActionFamily load_action(const std::string& source) {
  auto payload = load_input(source);
  if (auto* fam = std::get_if<ActionFamily>(&payload)) return *fam;
  throw MalformedInput("\"" + source + "\" is not an action family");
}

}  // namespace klein
