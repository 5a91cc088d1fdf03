// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "test_util.hpp"

using namespace irsvlc;

namespace {

SweepSpec quick_spec(SweepVar var, std::vector<double> values) {
    SweepSpec spec;
    spec.scenario_name = "test";
    spec.variable = var;
    spec.values = std::move(values);
    spec.trials = 5;
    spec.seed = 7;
    return spec;
}

/// Drop the wall_ms column (10th field); timing is the one nondeterministic field.
std::string strip_wall_ms(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = 0;
        int field = 0;
        std::string rebuilt;
        while (start <= line.size()) {
            size_t comma = line.find(',', start);
            const std::string tok =
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (field != 9) {
                if (!rebuilt.empty()) rebuilt += ',';
                rebuilt += tok;
            }
            ++field;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        out << rebuilt << '\n';
    }
    return out.str();
}

} // namespace

TEST_CASE("scenario loading") {
    SUBCASE("paper scenario loads with defaults") {
        const ScenarioConfig cfg = irsvlc::testing::paper_config();
        CHECK(cfg.led_pos.size() == 4);
        CHECK(cfg.num_units == 64);
        CHECK(cfg.reflectance == doctest::Approx(0.5));
    }
    SUBCASE("missing file reports the path") {
        CHECK_THROWS_WITH_AS(load_config("/nonexistent/file.json"), doctest::Contains("nonexistent"),
                             std::runtime_error);
    }
    SUBCASE("out-of-range reflectance is rejected") {
        SweepSpec spec = quick_spec(SweepVar::reflectance, {1.3});
        CHECK_THROWS_AS(run_sweep(irsvlc::testing::paper_config(), spec), std::runtime_error);
    }
    SUBCASE("n_units beyond capacity is rejected") {
        SweepSpec spec = quick_spec(SweepVar::n_units, {100000});
        CHECK_THROWS_AS(run_sweep(irsvlc::testing::paper_config(), spec), std::runtime_error);
    }
}

TEST_CASE("sweep execution") {
    ScenarioConfig base = irsvlc::testing::paper_config();
    base.num_units = 8;

    SUBCASE("one row per algorithm and sweep value") {
        SweepSpec spec = quick_spec(SweepVar::power_dbw, {0.0, 10.0});
        const auto rows = run_sweep(base, spec);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0].algorithm == "proposed");
        CHECK(rows[1].algorithm == "random");
        CHECK(rows[2].algorithm == "no-irs");
        CHECK(rows[0].sweep_value == 0.0);
        CHECK(rows[3].sweep_value == 10.0);
        CHECK(rows[1].trial_count == 5);
        CHECK(std::isfinite(rows[0].c_hat_s_bps));
        CHECK(std::isnan(rows[2].c_hat_s_bps));
    }
    SUBCASE("no-IRS rows are constant across the unit-count sweep") {
        SweepSpec spec = quick_spec(SweepVar::n_units, {0, 8, 16});
        spec.algorithms = {Algo::no_irs};
        const auto rows = run_sweep(base, spec);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].c_s_bps == doctest::Approx(rows[0].c_s_bps).epsilon(1e-12));
        CHECK(rows[2].c_s_bps == doctest::Approx(rows[0].c_s_bps).epsilon(1e-12));
    }
    SUBCASE("proposed stays above no-IRS at its converged output") {
        SweepSpec spec = quick_spec(SweepVar::power_dbw, {4.0, 10.0});
        spec.algorithms = {Algo::proposed, Algo::no_irs};
        const auto rows = run_sweep(base, spec);
        for (size_t i = 0; i < rows.size(); i += 2) CHECK(rows[i].c_s_bps >= rows[i + 1].c_s_bps - 1e-9);
    }
}

TEST_CASE("result CSV") {
    ScenarioConfig base = irsvlc::testing::paper_config();
    base.num_units = 8;
    SweepSpec spec = quick_spec(SweepVar::power_dbw, {10.0});

    SUBCASE("empty table is an error") {
        std::ostringstream os;
        CHECK_THROWS_AS(write_results({}, os), std::runtime_error);
    }
    SUBCASE("header and row shape") {
        const auto rows = run_sweep(base, spec);
        std::ostringstream os;
        write_results(rows, os);
        std::istringstream in(os.str());
        std::string header;
        std::getline(in, header);
        CHECK(header ==
              "scenario,algorithm,sweep_var,sweep_value,trial_count,c_s_bps,c_hat_s_bps,c_e_bps,"
              "outer_iters,wall_ms,seed");
        std::string row;
        std::getline(in, row);
        CHECK(row.substr(0, 24) == "test,proposed,power_dbw,");
    }
    SUBCASE("reruns with the same seed agree apart from wall-clock timing") {
        std::ostringstream a, b;
        write_results(run_sweep(base, spec), a);
        write_results(run_sweep(base, spec), b);
        CHECK(strip_wall_ms(a.str()) == strip_wall_ms(b.str()));
    }
}
