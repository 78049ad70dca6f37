#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqed/basis.hpp"
#include "cqed/constants.hpp"
#include "cqed/modes.hpp"
#include "cqed/potential.hpp"

namespace cqed {

// Parsed experiment description.  The schema is strict: unknown keys are
// rejected everywhere, so typos fail loudly instead of silently running
// with defaults.
struct ExperimentConfig {
    std::string experiment;
    std::string output = "result.csv";
    std::uint64_t seed = 7;
    int jobs = 0;

    PhysicalConstants constants;
    GridSpec grid;
    std::vector<int> fock_n_max{8};  // broadcast to every mode when single
    ModeSet modes;
    ExternalPotential potential;
    bool include_dip = true;
    nlohmann::json scan;  // experiment-specific section

    CompositeBasis basis() const;

    static const std::vector<std::string>& known_experiments();

    // Throws config_error on the first problem.
    static ExperimentConfig from_json(const nlohmann::json& j);

    // Collects every schema violation with key context; empty means valid.
    static std::vector<std::string> validate_json(const nlohmann::json& j);
};

nlohmann::json load_json_file(const std::string& path);

// "grid.n_points=400" or "modes[0].lambda=0.1"; values parse as JSON with
// a string fallback.
void apply_override(nlohmann::json& j, const std::string& assignment);

}  // namespace cqed
