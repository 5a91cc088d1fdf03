// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "irsvlc/channel.hpp"
#include "irsvlc/scene.hpp"

namespace irsvlc {

/// Unit-to-target assignment. Target 0 is the jamming column, targets 1..L
/// serve the corresponding LED; -1 marks an unassigned unit (no-IRS rows).
struct AssignmentMatrix {
    int num_units = 0;
    int num_leds = 0;
    std::vector<int> target;   // size N, values in {-1, 0, .., L}

    static AssignmentMatrix zero(int n, int l) {
        AssignmentMatrix g;
        g.num_units = n;
        g.num_leds = l;
        g.target.assign(n, -1);
        return g;
    }

    bool entry(int n, int col) const { return target[n] == col; }
    std::vector<int> column_sums() const;
    /// Constraints: every row assigned to exactly one of the L+1 columns and
    /// every column holds at least floor(N / (L+1)) units.
    bool feasible() const;

    friend bool operator==(const AssignmentMatrix&, const AssignmentMatrix&) = default;
};

struct RateReport {
    int num_users = 0;
    int num_leds = 0;
    std::vector<double> sinr;       // K x L
    std::vector<double> cap_user;   // K x L, bit/s
    double cap_eve = 0.0;           // bit/s
    double secrecy = 0.0;           // bit/s, may be negative

    double sinr_at(int k, int l) const { return sinr[static_cast<size_t>(k) * num_leds + l]; }
    double cap_at(int k, int l) const { return cap_user[static_cast<size_t>(k) * num_leds + l]; }
};

/// LoS interference plus noise at a receiver when LED l transmits the payload.
double interference_plus_noise(const GainSet& gains, const Scene& scene, int receiver, int l);

/// Exact SINR of user k served by LED l under the given assignment.
double sinr(const GainSet& gains, const Scene& scene, const AssignmentMatrix& g, int k, int l);

/// Capacity lower bound (W/2) log2(1 + (e / 2pi) gamma).
double capacity_user(double sinr_value, double bandwidth_hz);

/// Eavesdropper capacity upper bound, jamming through the complementary LED.
double capacity_eve(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                    const AssignmentMatrix& g);

/// Full report: per-user SINRs/capacities, eavesdropper capacity, secrecy rate.
RateReport secrecy_rate(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                        const AssignmentMatrix& g);

} // namespace irsvlc
