#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klein/jets.hpp"
#include "klein/lie_algebra.hpp"

namespace klein {

using CatalogPayload = std::variant<LieAlgebra, KleinPair, ActionFamily>;

struct CatalogEntry {
  std::string key;
  std::vector<long> params;
  CatalogPayload payload;
  /// Where the entry comes from and what it is known to satisfy.
  std::string note;
  /// Pairs: documented effectiveness and order.
  std::optional<bool> effective;
  std::optional<std::size_t> order;
  /// Actions: documented transitivity at the base point.
  std::optional<bool> transitive;
};

struct ParamSpec {
  std::string name;
  long min = 0;
  long max = 0;
  long fallback = 0;
};

struct CatalogListing {
  std::string key;
  std::string kind;  // "algebra", "pair" or "action"
  std::vector<ParamSpec> params;
  std::string description;
};

/// Stable ordering: algebras, then pairs, then actions.
const std::vector<CatalogListing>& catalog_list();

/// Missing trailing parameters take their defaults. Throws CatalogError on
/// an unknown key or out-of-range parameters.
CatalogEntry catalog_get(const std::string& key, const std::vector<long>& params = {});

/// Convenience accessors; throw CatalogError when the payload kind differs.
LieAlgebra catalog_algebra(const std::string& key, const std::vector<long>& params = {});
KleinPair catalog_pair(const std::string& key, const std::vector<long>& params = {});
ActionFamily catalog_action(const std::string& key, const std::vector<long>& params = {});

}  // namespace klein
