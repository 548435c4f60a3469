#pragma once

#include "sphtd/fgab.hpp"

#include <json.hpp>

namespace sphtd {

/* JSON numbers when the value fits in a long, decimal strings otherwise. */
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& v);

/* {"rank": int, "torsion": [int]} */
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& v);

}  // namespace sphtd
