#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hml/rng.hpp"

namespace hml {

struct ExperimentConfig {
    std::string experiment;
    std::optional<std::size_t> n;
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::uint64_t seed = kDefaultSeed;
    std::string out_path; // write the JSON report here when nonempty
    std::string csv_dir;  // dump plot curves here when nonempty
};

struct Assertion {
    std::string name;
    double measured = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::string provenance;
    bool pass = false;
};

struct ExperimentReport {
    std::string experiment;
    std::uint64_t seed = 0;
    nlohmann::json inputs;
    nlohmann::json grid_info;
    nlohmann::json evidence; // free-form measured values
    std::vector<Assertion> assertions;
    bool pass = true;
    double wall_ms = 0.0;

    nlohmann::json to_json() const;
};

// stable sorted list of registered experiment names
std::vector<std::string> list_experiments();

// throws Error("unknown-experiment") / Error("config-invalid")
ExperimentReport run_experiment(const ExperimentConfig& cfg);

} // namespace hml
