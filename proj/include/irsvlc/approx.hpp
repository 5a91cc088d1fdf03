// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "irsvlc/rate.hpp"

namespace irsvlc {

/// Coefficients of the affine-in-log lower bound of log2(1 + x) at x*.
struct Lemma1Coeffs {
    double eta = 0.0;
    double xi = 0.0;
};

/// eta = x*/(1+x*), xi = log2(1+x*) - eta log2(x*). Throws for x* <= 0.
Lemma1Coeffs lemma1_coeffs(double tangent);

/// Taylor expansion point for the user-side NLoS/LoS gain ratio.
double tangent_lambda(const GainSet& gains, int k);

/// Constant standing in for the jamming aggregate in the eavesdropper Taylor step.
double delta_const(const GainSet& gains);

struct ApproxOptions {
    bool strict_eq14_weights = false;   // keep the (1 + lambda_k) denominator factor
    double eve_tangent_scale = 1.0;     // multiplies the true eavesdropper tangent point
};

/// Linearization coefficients evaluated at the exact SINRs of one assignment.
/// The tangent is taken per (user, LED) pair; a single per-user tangent line
/// cannot follow SINRs that span several decades across the LEDs.
struct ApproxCoeffs {
    std::vector<double> eta_user, xi_user;   // K x L; zero where f_{l,k} = 0
    std::vector<double> lambda_user;         // per user
    std::vector<double> eta_eve, xi_eve;     // per LED; zero where f_{l,k*} = 0
    std::vector<double> gamma_los;   // (K+1) x L, e rho^2 h1^2 P^2 / (2 pi I)
    double delta_c = 0.0;
    int num_users = 0, num_leds = 0;

    double gamma_at(int r, int l) const { return gamma_los[static_cast<size_t>(r) * num_leds + l]; }
    double eta_at(int k, int l) const { return eta_user[static_cast<size_t>(k) * num_leds + l]; }
    double xi_at(int k, int l) const { return xi_user[static_cast<size_t>(k) * num_leds + l]; }
};

ApproxCoeffs approx_coeffs(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                           const AssignmentMatrix& tangent_assignment, const ApproxOptions& opts = {});

/// N x (L+1) weight matrix; column 0 is the jamming column.
std::vector<double> weight_matrix(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                                  const ApproxCoeffs& coeffs, const ApproxOptions& opts = {});

/// Assignment-independent part of the linearized secrecy rate.
double bias_q(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
              const ApproxCoeffs& coeffs);

/// Coefficients, weights and bias bundled for one linearization.
struct ApproxState {
    ApproxCoeffs coeffs;
    std::vector<double> weights;   // N x (L+1)
    double bias = 0.0;
    int num_units = 0, num_leds = 0;

    double weight_at(int n, int col) const { return weights[static_cast<size_t>(n) * (num_leds + 1) + col]; }
};

ApproxState build_approx(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                         const AssignmentMatrix& tangent_assignment, const ApproxOptions& opts = {});

/// Linearized secrecy rate: sum of matched weights plus the bias.
double linearized_rate(const ApproxState& state, const AssignmentMatrix& g);

} // namespace irsvlc
