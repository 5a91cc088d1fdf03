// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <vector>

#include "irsvlc/scene.hpp"

namespace irsvlc {

/// LoS and reflected gains for all receivers. Row K is the eavesdropper.
struct GainSet {
    int num_users = 0;   // K
    int num_units = 0;   // N
    int num_leds = 0;    // L
    std::vector<double> h1;   // (K+1) x L, row-major
    std::vector<double> h2;   // (K+1) x N x L

    double h1_at(int receiver, int l) const {
        return h1[static_cast<size_t>(receiver) * num_leds + l];
    }
    double h2_at(int receiver, int n, int l) const {
        return h2[(static_cast<size_t>(receiver) * num_units + n) * num_leds + l];
    }
    int eve_row() const { return num_users; }
};

/// Lambertian LoS gain. LED normal points straight down, PD normal straight up.
/// Zero outside the FoV semi-angle or for a non-illuminating geometry.
double los_gain(const Vec3& led, const Vec3& pd, const PhysConsts& consts);

/// Single-reflection gain through one IRS unit. The irradiance angle is taken
/// at the LED toward the unit, the incidence angle at the PD from the unit.
double nlos_gain(const Vec3& led, const Vec3& unit, const Vec3& pd, const PhysConsts& consts);

GainSet gain_set(const Scene& scene);

/// Debug export: one CSV row per (receiver, unit, led) reflected gain plus
/// unit = -1 rows for the LoS gains.
void write_gains_csv(const GainSet& gains, std::ostream& out);

} // namespace irsvlc
