// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace irsvlc {

namespace {

// Potential-based shortest augmenting path solver, minimization, n <= m.
// cost is 1-indexed conceptually; here row-major n x m. Returns col match per row.
std::vector<int> km_min(const std::vector<double>& cost, int n, int m) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost[static_cast<size_t>(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j]) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

} // namespace

Matching hungarian_max(const KmProblem& problem) {
    Matching result;
    if (problem.rows == 0 || problem.cols == 0) return result;
    for (double w : problem.weight)
        if (!std::isfinite(w)) throw std::invalid_argument("hungarian_max: non-finite weight");

    const bool transpose = problem.rows > problem.cols;
    const int n = transpose ? problem.cols : problem.rows;
    const int m = transpose ? problem.rows : problem.cols;
    std::vector<double> cost(static_cast<size_t>(n) * m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c)
            cost[static_cast<size_t>(r) * m + c] = transpose ? -problem.at(c, r) : -problem.at(r, c);

    const std::vector<int> match = km_min(cost, n, m);
    for (int r = 0; r < n; ++r) {
        if (match[r] < 0) continue;
        const int row = transpose ? match[r] : r;
        const int col = transpose ? r : match[r];
        result.pairs.emplace_back(row, col);
        result.value += problem.at(row, col);
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

AssignmentMatrix solve_assignment(const std::vector<double>& weights, int num_units, int num_leds,
                                  int* rounds_out) {
    const int cols = num_leds + 1;
    if (static_cast<int>(weights.size()) != num_units * cols)
        throw std::invalid_argument("solve_assignment: weight matrix dimension mismatch");

    AssignmentMatrix g = AssignmentMatrix::zero(num_units, num_leds);
    std::vector<int> remaining(num_units);
    for (int n = 0; n < num_units; ++n) remaining[n] = n;

    int rounds = 0;
    while (!remaining.empty()) {
        KmProblem sub;
        sub.rows = static_cast<int>(remaining.size());
        sub.cols = cols;
        sub.weight.resize(static_cast<size_t>(sub.rows) * cols);
        for (int r = 0; r < sub.rows; ++r)
            for (int c = 0; c < cols; ++c)
                sub.weight[static_cast<size_t>(r) * cols + c] = weights[static_cast<size_t>(remaining[r]) * cols + c];

        const Matching match = hungarian_max(sub);
        std::vector<char> taken(remaining.size(), 0);
        for (const auto& [row, col] : match.pairs) {
            g.target[remaining[row]] = col;
            taken[row] = 1;
        }
        std::vector<int> next;
        for (size_t r = 0; r < remaining.size(); ++r)
            if (!taken[r]) next.push_back(remaining[r]);
        remaining = std::move(next);
        ++rounds;
    }
    if (rounds_out) *rounds_out = rounds;
    return g;
}

IterKmResult iterative_km(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                          const IterKmOptions& opts) {
    const int N = gains.num_units;
    const int L = gains.num_leds;

    std::mt19937_64 rng(opts.seed);
    auto eve_scale = [&]() {
        if (!opts.eve_tangent_random) return 1.0;
        return std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    };

    IterKmResult res;
    AssignmentMatrix current = AssignmentMatrix::zero(N, L);   // LoS-only tangent first
    std::vector<AssignmentMatrix> seen;

    for (int iter = 0; iter < opts.max_outer; ++iter) {
        ApproxOptions aopts;
        aopts.strict_eq14_weights = opts.strict_eq14_weights;
        aopts.eve_tangent_scale = eve_scale();
        ApproxState state = build_approx(gains, scene, svc, current, aopts);
        AssignmentMatrix next = solve_assignment(state.weights, N, L);
        res.outer_iters = iter + 1;
        res.approx = std::move(state);

        if (next == current) {
            res.assignment = next;
            res.converged = true;
            break;
        }
        const bool revisited =
            std::find(seen.begin(), seen.end(), next) != seen.end();
        seen.push_back(next);
        current = std::move(next);
        if (revisited) {
            // Oscillating fixed point: keep the iterate with the best exact rate.
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& cand : seen) {
                const double cs = secrecy_rate(gains, scene, svc, cand).secrecy;
                if (cs > best) {
                    best = cs;
                    res.assignment = cand;
                }
            }
            res.converged = false;
            res.report = secrecy_rate(gains, scene, svc, res.assignment);
            return res;
        }
        res.assignment = current;
    }
    res.report = secrecy_rate(gains, scene, svc, res.assignment);
    return res;
}

AssignmentMatrix random_assignment(const Scene& scene, std::uint64_t seed) {
    const int N = scene.num_units();
    const int L = scene.num_leds();
    const int cols = L + 1;
    AssignmentMatrix g = AssignmentMatrix::zero(N, L);
    std::vector<int> labels;
    labels.reserve(N);
    const int quota = N / cols;
    for (int c = 0; c < cols; ++c)
        for (int i = 0; i < quota; ++i) labels.push_back(c);
    for (int c = 0; static_cast<int>(labels.size()) < N; ++c) labels.push_back(c % cols);
    std::mt19937_64 rng(seed);
    std::shuffle(labels.begin(), labels.end(), rng);
    g.target = std::move(labels);
    return g;
}

OracleResult exhaustive_oracle(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                               Objective objective, const ApproxState* approx) {
    const int N = gains.num_units;
    const int L = gains.num_leds;
    const int cols = L + 1;
    if (objective == Objective::linearized && approx == nullptr)
        throw std::invalid_argument("exhaustive_oracle: linearized objective needs the approx state");

    double total = 1.0;
    for (int n = 0; n < N; ++n) total *= cols;
    if (total > 1e7) throw std::runtime_error("exhaustive_oracle: instance too large");

    const int quota = N / cols;
    AssignmentMatrix g = AssignmentMatrix::zero(N, L);
    if (N > 0) g.target.assign(N, 0);

    auto evaluate = [&](const AssignmentMatrix& cand) {
        return objective == Objective::exact ? secrecy_rate(gains, scene, svc, cand).secrecy
                                             : linearized_rate(*approx, cand);
    };

    OracleResult best;
    bool have_best = false;
    if (N == 0) {
        best.assignment = g;
        best.value = secrecy_rate(gains, scene, svc, g).secrecy;
        return best;
    }

    std::vector<int> counts(cols, 0);
    counts[0] = N;
    while (true) {
        bool feasible = true;
        for (int c = 0; c < cols; ++c)
            if (counts[c] < quota) {
                feasible = false;
                break;
            }
        if (feasible) {
            const double v = evaluate(g);
            if (!have_best || v > best.value) {
                best.value = v;
                best.assignment = g;
                have_best = true;
            }
        }
        // mixed-radix increment
        int pos = N - 1;
        while (pos >= 0) {
            --counts[g.target[pos]];
            if (g.target[pos] + 1 < cols) {
                ++g.target[pos];
                ++counts[g.target[pos]];
                break;
            }
            g.target[pos] = 0;
            ++counts[0];
            --pos;
        }
        if (pos < 0) break;
    }
    if (!have_best) throw std::runtime_error("exhaustive_oracle: no feasible assignment");
    return best;
}

} // namespace irsvlc
