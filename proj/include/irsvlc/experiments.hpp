// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "irsvlc/assign.hpp"
#include "irsvlc/scene.hpp"

namespace irsvlc {

enum class Algo { proposed, proposed_no_eve_sinr, random_baseline, no_irs, oracle };

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);   // throws on unknown names

enum class SweepVar { power_dbw, n_units, reflectance };

const char* sweep_var_name(SweepVar v);
SweepVar sweep_var_from_name(const std::string& name);

struct SweepSpec {
    std::string scenario_name;
    std::vector<Algo> algorithms{Algo::proposed, Algo::random_baseline, Algo::no_irs};
    SweepVar variable = SweepVar::power_dbw;
    std::vector<double> values;
    int trials = 200;            // randomized baselines
    std::uint64_t seed = 0;
    bool strict_eq14_weights = false;

    void validate(const ScenarioConfig& cfg) const;   // throws on bad ranges
};

struct ResultRow {
    std::string scenario;
    std::string algorithm;
    std::string sweep_var;
    double sweep_value = 0.0;
    int trial_count = 1;
    double c_s_bps = 0.0;
    double c_hat_s_bps = 0.0;   // NaN for algorithms without a linearization
    double c_e_bps = 0.0;
    int outer_iters = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

/// Load a scenario file from disk. Throws with the file path on failure.
ScenarioConfig load_config(const std::string& path);

/// Apply one sweep value to a copy of the base config.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVar var, double value);

/// One row per (algorithm, sweep value); randomized baselines are aggregated
/// over spec.trials seeded trials.
std::vector<ResultRow> run_sweep(const ScenarioConfig& base, const SweepSpec& spec);

void write_results(const std::vector<ResultRow>& rows, std::ostream& out);
void write_results(const std::vector<ResultRow>& rows, const std::string& path);

} // namespace irsvlc
