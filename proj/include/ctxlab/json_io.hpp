// json_io.hpp
// JSON serialization for scenarios, models, states, observables, and
// densities. Table rows are keyed by comma-joined context labels; sections by
// concatenated outcome labels; exact weights travel as "p/q" strings and
// approximate ones as numbers.

#pragma once

#include <json.hpp>
#include <string>

#include "entropy.hpp"
#include "model.hpp"
#include "quantum.hpp"

namespace ctxlab {

nlohmann::json scenario_to_json(const MeasurementScenario& sc);
MeasurementScenario scenario_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const EmpiricalModel& m);
EmpiricalModel model_from_json(const nlohmann::json& j);

// Either explicit {"n", "amplitudes": [[re, im], ...]} or a named family:
// {"kind": "ghz"|"dicke"|"w"|"bell"|"balanced"|"random", ...}.
QuantumState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const QuantumState& s);

// {"pauli": "X"} or {"theta": .., "phi": .., "label": ..}.
LocalObservable observable_from_json(const nlohmann::json& j);

// Array with one observable array per party.
std::vector<std::vector<LocalObservable>> menus_from_json(
    const nlohmann::json& j);

nlohmann::json density_to_json(const DensityMatrix& rho);

// {"n", "entries": [[[re, im], ...], ...]}; validated to be a density matrix.
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);  // throws input_error
void write_json_file(const std::string& path, const nlohmann::json& j);

// Deterministic dump: objects keep sorted keys.
std::string dump_sorted(const nlohmann::json& j, int indent = 2);

}  // namespace ctxlab
