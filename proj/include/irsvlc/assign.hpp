// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irsvlc/approx.hpp"
#include "irsvlc/rate.hpp"

namespace irsvlc {

/// Maximum-weight bipartite matching instance; rows and columns need not agree.
struct KmProblem {
    int rows = 0;
    int cols = 0;
    std::vector<double> weight;   // rows x cols, row-major

    double at(int r, int c) const { return weight[static_cast<size_t>(r) * cols + c]; }
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;   // (row, col), sorted by row
    double value = 0.0;
};

/// Kuhn-Munkres on the rectangular matrix; matches min(rows, cols) pairs.
Matching hungarian_max(const KmProblem& problem);

/// Inner loop of the assignment: repeated matchings with matched units removed
/// until every unit is placed. rounds_out, when given, receives the number of
/// matching rounds (always ceil(N / (L+1))).
AssignmentMatrix solve_assignment(const std::vector<double>& weights, int num_units, int num_leds,
                                  int* rounds_out = nullptr);

struct IterKmOptions {
    bool strict_eq14_weights = false;
    bool eve_tangent_random = false;   // tangent drawn from [0.1, 10] x true SINR
    std::uint64_t seed = 0;
    int max_outer = 50;
};

struct IterKmResult {
    AssignmentMatrix assignment;
    RateReport report;
    ApproxState approx;
    int outer_iters = 0;
    bool converged = false;
};

/// Outer/inner loop: refresh the linearization at the current assignment, then
/// re-solve the matching rounds until the assignment stabilizes (or the best
/// seen iterate is returned on oscillation / iteration cap).
IterKmResult iterative_km(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                          const IterKmOptions& opts = {});

/// Balanced random baseline: near-equal column counts, rows shuffled by seed.
AssignmentMatrix random_assignment(const Scene& scene, std::uint64_t seed);

enum class Objective { exact, linearized };

struct OracleResult {
    AssignmentMatrix assignment;
    double value = 0.0;
};

/// Enumerates every feasible assignment; guarded to (L+1)^N <= 1e7.
/// Objective::linearized requires the approx state.
OracleResult exhaustive_oracle(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                               Objective objective, const ApproxState* approx = nullptr);

} // namespace irsvlc
