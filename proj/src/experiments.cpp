// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace irsvlc {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::proposed: return "proposed";
        case Algo::proposed_no_eve_sinr: return "proposed-no-eve-sinr";
        case Algo::random_baseline: return "random";
        case Algo::no_irs: return "no-irs";
        case Algo::oracle: return "oracle";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    for (Algo a : {Algo::proposed, Algo::proposed_no_eve_sinr, Algo::random_baseline, Algo::no_irs, Algo::oracle})
        if (name == algo_name(a)) return a;
    throw std::runtime_error("unknown algorithm '" + name + "'");
}

const char* sweep_var_name(SweepVar v) {
    switch (v) {
        case SweepVar::power_dbw: return "power_dbw";
        case SweepVar::n_units: return "n_units";
        case SweepVar::reflectance: return "reflectance";
    }
    return "?";
}

SweepVar sweep_var_from_name(const std::string& name) {
    if (name == "power" || name == "power_dbw") return SweepVar::power_dbw;
    if (name == "n" || name == "n_units") return SweepVar::n_units;
    if (name == "delta" || name == "reflectance") return SweepVar::reflectance;
    throw std::runtime_error("unknown sweep variable '" + name + "'");
}

void SweepSpec::validate(const ScenarioConfig& cfg) const {
    if (values.empty()) throw std::runtime_error("sweep: value list must be nonempty");
    if (trials < 1) throw std::runtime_error("sweep: trials must be >= 1");
    if (algorithms.empty()) throw std::runtime_error("sweep: algorithm list must be nonempty");
    for (double v : values) {
        switch (variable) {
            case SweepVar::power_dbw:
                break;
            case SweepVar::n_units:
                if (v < 0 || v != std::floor(v)) throw std::runtime_error("sweep: n_units values must be nonnegative integers");
                if (static_cast<int>(v) > wall_capacity(cfg))
                    throw std::runtime_error("sweep: n_units value exceeds wall capacity");
                break;
            case SweepVar::reflectance:
                if (v < 0.0 || v > 1.0) throw std::runtime_error("sweep: reflectance values must lie in [0, 1]");
                break;
        }
    }
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        ScenarioConfig cfg = parse_scenario(ss.str());
        if (cfg.reflectance < 0.0 || cfg.reflectance > 1.0)
            throw std::runtime_error("irs.reflectance must lie in [0, 1]");
        return cfg;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVar var, double value) {
    ScenarioConfig cfg = base;
    switch (var) {
        case SweepVar::power_dbw:
            for (double& p : cfg.led_power_dbw) p = value;
            break;
        case SweepVar::n_units:
            cfg.num_units = static_cast<int>(value);
            break;
        case SweepVar::reflectance:
            cfg.reflectance = value;
            break;
    }
    return cfg;
}

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

ResultRow run_algo(Algo algo, const Scene& scene, const GainSet& gains, const ServiceModel& svc,
                   const SweepSpec& spec, std::uint64_t point_seed) {
    ResultRow row;
    row.algorithm = algo_name(algo);
    row.trial_count = 1;
    row.seed = point_seed;
    row.c_hat_s_bps = std::numeric_limits<double>::quiet_NaN();
    const double t0 = now_ms();
    switch (algo) {
        case Algo::proposed:
        case Algo::proposed_no_eve_sinr: {
            IterKmOptions opts;
            opts.strict_eq14_weights = spec.strict_eq14_weights;
            opts.eve_tangent_random = algo == Algo::proposed_no_eve_sinr;
            opts.seed = point_seed;
            const IterKmResult res = iterative_km(gains, scene, svc, opts);
            row.c_s_bps = res.report.secrecy;
            row.c_e_bps = res.report.cap_eve;
            row.c_hat_s_bps = linearized_rate(res.approx, res.assignment);
            row.outer_iters = res.outer_iters;
            break;
        }
        case Algo::random_baseline: {
            double cs = 0.0, ce = 0.0;
            for (int t = 0; t < spec.trials; ++t) {
                const AssignmentMatrix g = random_assignment(scene, point_seed + static_cast<std::uint64_t>(t));
                const RateReport rep = secrecy_rate(gains, scene, svc, g);
                cs += rep.secrecy;
                ce += rep.cap_eve;
            }
            row.trial_count = spec.trials;
            row.c_s_bps = cs / spec.trials;
            row.c_e_bps = ce / spec.trials;
            break;
        }
        case Algo::no_irs: {
            const RateReport rep =
                secrecy_rate(gains, scene, svc, AssignmentMatrix::zero(scene.num_units(), scene.num_leds()));
            row.c_s_bps = rep.secrecy;
            row.c_e_bps = rep.cap_eve;
            break;
        }
        case Algo::oracle: {
            const OracleResult res = exhaustive_oracle(gains, scene, svc, Objective::exact);
            const RateReport rep = secrecy_rate(gains, scene, svc, res.assignment);
            row.c_s_bps = rep.secrecy;
            row.c_e_bps = rep.cap_eve;
            break;
        }
    }
    row.wall_ms = now_ms() - t0;
    return row;
}

} // namespace

std::vector<ResultRow> run_sweep(const ScenarioConfig& base, const SweepSpec& spec) {
    spec.validate(base);
    std::vector<ResultRow> rows;
    for (size_t vi = 0; vi < spec.values.size(); ++vi) {
        const ScenarioConfig cfg = apply_sweep_value(base, spec.variable, spec.values[vi]);
        const Scene scene = build_scene(cfg);
        const GainSet gains = gain_set(scene);
        const ServiceModel svc = build_service_model(scene);
        // Per-point seed offset keeps trials independent across sweep points.
        const std::uint64_t point_seed = spec.seed + 1000003ull * vi;
        for (Algo algo : spec.algorithms) {
            ResultRow row = run_algo(algo, scene, gains, svc, spec, point_seed);
            row.scenario = spec.scenario_name;
            row.sweep_var = sweep_var_name(spec.variable);
            row.sweep_value = spec.values[vi];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_results(const std::vector<ResultRow>& rows, std::ostream& out) {
    if (rows.empty()) throw std::runtime_error("write_results: empty result table");
    out << "scenario,algorithm,sweep_var,sweep_value,trial_count,c_s_bps,c_hat_s_bps,c_e_bps,"
           "outer_iters,wall_ms,seed\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6g,%d,%.9e,%.9e,%.9e,%d,%.3f,%llu", r.sweep_value, r.trial_count,
                      r.c_s_bps, r.c_hat_s_bps, r.c_e_bps, r.outer_iters, r.wall_ms,
                      static_cast<unsigned long long>(r.seed));
        out << r.scenario << ',' << r.algorithm << ',' << r.sweep_var << ',' << buf << '\n';
    }
}

void write_results(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_results: cannot open '" + path + "'");
    write_results(rows, out);
}

} // namespace irsvlc
