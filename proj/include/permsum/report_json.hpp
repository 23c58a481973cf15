#pragma once

// JSON serialization for every report the CLI emits. All writers go through
// render_report, which stamps a schema_version field, rejects non-finite
// numbers, and renders with sorted keys so byte-identical reruns are a
// meaningful check.

#include <string>

#include "permsum/bounds.hpp"
#include "permsum/indep_test.hpp"
#include "permsum/moments.hpp"
#include "permsum/tails.hpp"

#include "json.hpp"

namespace permsum {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const matrix_moments& m);
nlohmann::json to_json(const bound_evaluation& e);
nlohmann::json to_json(const tail_curve& c);
nlohmann::json to_json(const domination_row& r);
nlohmann::json to_json(const domination_report& r);
nlohmann::json to_json(const sweep_spec& s);
nlohmann::json to_json(const sweep_report& r);
nlohmann::json to_json(const test_report& r);
nlohmann::json to_json(const simulation_result& r);
nlohmann::json to_json(const power_result& r);
nlohmann::json constants_json();

// Wraps in {"schema_version": ..., "kind": kind, "report": payload}, checks
// for non-finite numbers anywhere in the tree, returns dump(2) + newline.
std::string render_report(const std::string& kind, const nlohmann::json& payload);

} // namespace permsum
