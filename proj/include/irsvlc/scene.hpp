// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "irsvlc/vec3.hpp"

namespace irsvlc {

/// Physical constants of the optical front-end (Table-I style parameters).
struct PhysConsts {
    double pd_area_m2 = 4e-4;
    double lambertian_m = 1.0;
    double optical_filter_gain = 1.0;
    double fov_semiangle_rad = 0.0;   // (0, pi/2]
    double refractive_index = 1.5;
    double reflectance = 0.5;         // IRS unit reflectance, [0, 1]
    double pd_responsivity = 0.5;     // A/W, shared by users and eavesdropper
    double noise_variance_w = 1e-10;
    double bandwidth_hz = 20e6;
    double unit_area_m2 = 1e-2;

    void validate() const;            // throws std::invalid_argument
};

/// Scenario description in file-level units (dBW powers, degree angles).
struct ScenarioConfig {
    Vec3 room_dims{8.0, 8.0, 3.0};
    std::vector<Vec3> led_pos;
    std::vector<double> led_power_dbw;
    std::vector<Vec3> user_pos;
    Vec3 eve_pos{};
    int eve_target_user = 1;          // 1-based user index
    // IRS placement on the y=0 wall
    double spacing_m = 0.2;
    double margin_h_m = 1.0;
    double margin_v_m = 0.3;
    int num_units = 0;
    double reflectance = 0.5;
    // constants (degrees for the FoV semi-angle)
    double pd_area_m2 = 4e-4;
    double lambertian_m = 1.0;
    double optical_filter_gain = 1.0;
    double fov_semiangle_deg = 80.0;
    double refractive_index = 1.5;
    double pd_responsivity = 0.5;
    double noise_variance_w = 1e-10;
    double bandwidth_hz = 20e6;
    double unit_area_m2 = 1e-2;
};

/// Parse a scenario JSON document. Unknown keys are rejected; Table-I defaults
/// fill in missing constants. Throws std::runtime_error with a descriptive
/// message on schema violations.
ScenarioConfig parse_scenario(const std::string& json_text);

/// Immutable physical scenario. Positions in meters, powers in watts.
struct Scene {
    Vec3 room_dims;
    std::vector<Vec3> led_pos;
    std::vector<double> led_power_w;
    std::vector<Vec3> user_pos;
    Vec3 eve_pos;
    int target_user = 0;              // 0-based k*
    std::vector<Vec3> irs_units;
    PhysConsts consts;

    int num_leds() const { return static_cast<int>(led_pos.size()); }
    int num_users() const { return static_cast<int>(user_pos.size()); }
    int num_units() const { return static_cast<int>(irs_units.size()); }

    /// Deterministic serialized form (same config -> identical bytes).
    std::string to_json() const;
};

/// Number of grid slots the configured wall offers.
int wall_capacity(const ScenarioConfig& cfg);

/// Build the scene: convert units, lay out the IRS grid on the y=0 wall
/// (rows left-to-right, top row first at z = height - margin_v, 20 cm default
/// spacing). Throws on malformed configs, capacity overflow, out-of-room
/// positions, or duplicates.
Scene build_scene(const ScenarioConfig& cfg);

/// Service probabilities and complementary LED indices.
struct ServiceModel {
    int num_leds = 0;
    int num_users = 0;
    std::vector<double> f;   // L x K row-major, rows sum to 1
    std::vector<int> l_c;    // per-LED complementary index, -1 when L == 1

    double f_at(int l, int k) const { return f[static_cast<size_t>(l) * num_users + k]; }
};

/// f_{l,k} proportional to the inverse squared LoS distance, normalized per LED.
std::vector<double> service_probabilities(const Scene& scene);

/// LED closest to the eavesdropper; the second closest when that is l itself.
/// Throws when fewer than two LEDs exist.
int complementary_led(const Scene& scene, int l);

ServiceModel build_service_model(const Scene& scene);

} // namespace irsvlc
