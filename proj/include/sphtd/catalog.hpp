#pragma once

#include "sphtd/graded.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sphtd {

struct CatalogEntry {
    BaseManifold base;
    std::string description;
};

/* Built-in closed oriented manifolds; every entry passes validate_base. */
const std::vector<CatalogEntry>& catalog();

std::optional<BaseManifold> find_base(const std::string& name);

/* {"name": str, "dim": int, "groups": [{"degree": int, "rank": int, "torsion": [int]}...]}
 * Degrees not listed are zero. Throws Error(InvalidBase) on malformed input. */
BaseManifold base_from_json(const nlohmann::json& doc);
nlohmann::json base_to_json(const BaseManifold& base);

}  // namespace sphtd
