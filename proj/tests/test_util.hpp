// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <string>

#include "irsvlc/experiments.hpp"
#include "irsvlc/scene.hpp"

namespace irsvlc::testing {

inline std::string scenario_path(const std::string& name) {
    return std::string(IRSVLC_SCENARIO_DIR) + "/" + name;
}

inline ScenarioConfig paper_config() { return load_config(scenario_path("paper_room.json")); }

/// Small random scene: L LEDs on the ceiling, K users on the z=0.5 plane,
/// num_units IRS units on the y=0 wall. Deterministic per seed.
inline ScenarioConfig random_config(std::uint64_t seed, int num_leds, int num_users, int num_units,
                                    double room_x = 6.0, double room_y = 6.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.5, room_x - 0.5);
    std::uniform_real_distribution<double> uy(0.5, room_y - 0.5);

    ScenarioConfig cfg;
    cfg.room_dims = {room_x, room_y, 3.0};
    for (int l = 0; l < num_leds; ++l) {
        cfg.led_pos.push_back({ux(rng), uy(rng), 3.0});
        cfg.led_power_dbw.push_back(10.0);
    }
    for (int k = 0; k < num_users; ++k) cfg.user_pos.push_back({ux(rng), uy(rng), 0.5});
    cfg.eve_pos = {ux(rng), uy(rng), 0.5};
    cfg.eve_target_user = 1;
    cfg.num_units = num_units;
    cfg.spacing_m = 0.2;
    cfg.margin_h_m = 0.5;
    cfg.margin_v_m = 0.3;
    return cfg;
}

/// Paper-room config with users resampled uniformly on the walking plane.
inline ScenarioConfig paper_config_random_users(std::uint64_t seed) {
    ScenarioConfig cfg = paper_config();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.5, 7.5);
    for (auto& p : cfg.user_pos) p = {u(rng), u(rng), 0.5};
    cfg.eve_pos = {u(rng), u(rng), 0.5};
    return cfg;
}

} // namespace irsvlc::testing
