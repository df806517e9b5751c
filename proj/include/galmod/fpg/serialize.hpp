#pragma once

#include "galmod/fpg/module.hpp"
#include "json.hpp"

namespace galmod {

/// {"p", "n", "dim", "sigma": row-major entries}.  Reading also accepts
/// sigma as a list of rows.
nlohmann::json module_to_json(const FpGModule& m);
FpGModule module_from_json(const nlohmann::json& j);

/// {"basis": rows}
nlohmann::json submodule_to_json(const Submodule& s);
Submodule submodule_from_json(const FpGModule& parent, const nlohmann::json& j);

nlohmann::json rows_to_json(const MatrixFp& m);

}  // namespace galmod
