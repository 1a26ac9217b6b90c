#pragma once

#include <string>

#include "json.hpp"
#include "klein/catalog.hpp"

namespace klein {

using Json = nlohmann::ordered_json;

/// { "name", "dim", "basis", "brackets": [ {"i","j","v"} ] }; unknown
/// fields are rejected with MalformedInput.
LieAlgebra algebra_from_json(const Json& doc);
/// Algebra fields plus "stabilizer": [[rat x dim], ...].
KleinPair pair_from_json(const Json& doc);
/// { "vars", "point", "fields": [ [ [ {"coef","exps"} ] x n ] x m ] }.
ActionFamily action_from_json(const Json& doc);

Json to_json(const LieAlgebra& alg);
Json to_json(const KleinPair& pair);
Json to_json(const ActionFamily& fam);
Json subspace_to_json(const Subspace& s);
Json scalar_to_json(const Scalar& x);

/// Reads a file (kind detected from its fields: "stabilizer" marks a
/// pair, "vars" an action) or a catalog URI "catalog:key[:p1,p2,...]".
/// Throws MalformedInput / CatalogError.
CatalogPayload load_input(const std::string& source);

LieAlgebra load_algebra(const std::string& source);
KleinPair load_pair(const std::string& source);
ActionFamily load_action(const std::string& source);

}  // namespace klein
