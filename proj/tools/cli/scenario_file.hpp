#pragma once

#include <filesystem>

#include <json.hpp>

#include "schurbound/apps.hpp"

namespace schurbound::cli {

// Scenario documents. Matrices are arrays of rows; an entry is either a
// number or a [re, im] pair.
//
//   DOA: {"type": "doa", "N": 8, "K": 2, "P": 2, "omega": [...], "sigma_s": [[...], ...]}
//   CP:  {"type": "cp", "d": 3, "A": [[...]], "B": [[...]], "g": [[...], ...]}
//
// "type" is optional when the keys make the kind unambiguous.

enum class ScenarioKind { Doa, Cp };

ScenarioKind scenario_kind(const nlohmann::json& doc, const std::string& source = "<json>");

DoaScenario doa_scenario_from_json(const nlohmann::json& doc, const std::string& source = "<json>");
CpScenario cp_scenario_from_json(const nlohmann::json& doc, const std::string& source = "<json>");

nlohmann::json to_json(const DoaScenario& s);
nlohmann::json to_json(const CpScenario& s);

nlohmann::json load_json(const std::filesystem::path& path);

Matrix matrix_from_json(const nlohmann::json& rows, const std::string& source, const std::string& field);
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace schurbound::cli
