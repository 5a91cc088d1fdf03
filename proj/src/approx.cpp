// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsvlc {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kEoverTwoPi = std::numbers::e / (2.0 * std::numbers::pi);
} // namespace

Lemma1Coeffs lemma1_coeffs(double tangent) {
    if (!(tangent > 0.0)) throw std::invalid_argument("lemma1_coeffs: tangent point must be positive");
    Lemma1Coeffs c;
    c.eta = tangent / (1.0 + tangent);
    c.xi = std::log2(1.0 + tangent) - c.eta * std::log2(tangent);
    return c;
}

double tangent_lambda(const GainSet& gains, int k) {
    double los = 0.0;
    for (int l = 0; l < gains.num_leds; ++l) los += gains.h1_at(k, l);
    if (los <= 0.0) throw std::runtime_error("tangent_lambda: all LoS gains vanish for this user");
    double nlos = 0.0;
    for (int n = 0; n < gains.num_units; ++n)
        for (int l = 0; l < gains.num_leds; ++l) nlos += gains.h2_at(k, n, l);
    return nlos / (gains.num_leds * los);
}

double delta_const(const GainSet& gains) {
    const int eve = gains.eve_row();
    double acc = 0.0;
    for (int n = 0; n < gains.num_units; ++n)
        for (int l = 0; l < gains.num_leds; ++l) acc += gains.h2_at(eve, n, l);
    return acc / (static_cast<double>(gains.num_leds) * gains.num_leds);
}

ApproxCoeffs approx_coeffs(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                           const AssignmentMatrix& tangent_assignment, const ApproxOptions& opts) {
    const int K = gains.num_users;
    const int L = gains.num_leds;
    const double rho = scene.consts.pd_responsivity;

    ApproxCoeffs c;
    c.num_users = K;
    c.num_leds = L;
    c.delta_c = delta_const(gains);
    c.gamma_los.resize(static_cast<size_t>(K + 1) * L);
    for (int r = 0; r <= K; ++r)
        for (int l = 0; l < L; ++l) {
            const double sig = rho * gains.h1_at(r, l) * scene.led_power_w[l];
            c.gamma_los[static_cast<size_t>(r) * L + l] =
                kEoverTwoPi * sig * sig / interference_plus_noise(gains, scene, r, l);
        }

    // Per-link tangent points at the exact scaled SINR of the assignment being
    // linearized. Unserved links (f = 0) never contribute and carry zeros.
    c.eta_user.assign(static_cast<size_t>(K) * L, 0.0);
    c.xi_user.assign(static_cast<size_t>(K) * L, 0.0);
    c.lambda_user.resize(K);
    for (int k = 0; k < K; ++k) {
        bool served = false;
        for (int l = 0; l < L; ++l) {
            if (svc.f_at(l, k) <= 0.0) continue;
            served = true;
            const double x = kEoverTwoPi * sinr(gains, scene, tangent_assignment, k, l);
            if (x <= 0.0) throw std::runtime_error("approx_coeffs: zero SINR on a served link");
            const Lemma1Coeffs lc = lemma1_coeffs(x);
            c.eta_user[static_cast<size_t>(k) * L + l] = lc.eta;
            c.xi_user[static_cast<size_t>(k) * L + l] = lc.xi;
        }
        if (!served) throw std::runtime_error("approx_coeffs: user never served");
        c.lambda_user[k] = tangent_lambda(gains, k);
    }

    // Eavesdropper tangent points at the exact jammed SINR, per serving LED.
    const int eve = gains.eve_row();
    const int kstar = scene.target_user;
    c.eta_eve.assign(L, 0.0);
    c.xi_eve.assign(L, 0.0);
    bool eve_served = false;
    for (int l = 0; l < L; ++l) {
        if (svc.f_at(l, kstar) <= 0.0) continue;
        eve_served = true;
        double denom = interference_plus_noise(gains, scene, eve, l);
        const int lc = svc.l_c[l];
        if (lc >= 0) {
            double jam = 0.0;
            for (int n = 0; n < gains.num_units; ++n)
                if (tangent_assignment.target[n] == 0) jam += gains.h2_at(eve, n, lc);
            const double jam_sig = rho * scene.led_power_w[lc] * jam;
            denom += jam_sig * jam_sig;
        }
        const double sig = rho * gains.h1_at(eve, l) * scene.led_power_w[l];
        const double x = kEoverTwoPi * sig * sig / denom * opts.eve_tangent_scale;
        if (x <= 0.0) throw std::runtime_error("approx_coeffs: zero eavesdropper SINR on a served link");
        const Lemma1Coeffs le = lemma1_coeffs(x);
        c.eta_eve[l] = le.eta;
        c.xi_eve[l] = le.xi;
    }
    if (!eve_served) throw std::runtime_error("approx_coeffs: eavesdropper target never served");
    return c;
}

std::vector<double> weight_matrix(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                                  const ApproxCoeffs& coeffs, const ApproxOptions& opts) {
    const int K = gains.num_users;
    const int L = gains.num_leds;
    const int N = gains.num_units;
    const int eve = gains.eve_row();
    const int kstar = scene.target_user;
    const double rho = scene.consts.pd_responsivity;
    const double W = scene.consts.bandwidth_hz;

    std::vector<double> w(static_cast<size_t>(N) * (L + 1), 0.0);
    for (int n = 0; n < N; ++n) {
        // Jamming column: benefit of routing the complementary LED's signal
        // onto the eavesdropper, accumulated over the serving intervals.
        double w0 = 0.0;
        for (int i = 0; i < L; ++i) {
            const int ic = svc.l_c[i];
            if (ic < 0) continue;
            const double p = scene.led_power_w[ic];
            w0 += coeffs.eta_eve[i] * svc.f_at(i, kstar) * W * rho * rho * p * p *
                  gains.h2_at(eve, n, ic) * coeffs.delta_c /
                  (2.0 * interference_plus_noise(gains, scene, eve, i) * kLn2);
        }
        w[static_cast<size_t>(n) * (L + 1)] = w0;

        for (int l = 0; l < L; ++l) {
            double wl = 0.0;
            for (int k = 0; k < K; ++k) {
                const double h1 = gains.h1_at(k, l);
                if (h1 <= 0.0) {
                    if (svc.f_at(l, k) > 0.0)
                        throw std::runtime_error("weight_matrix: zero LoS gain on a served link");
                    continue;
                }
                double term = coeffs.eta_at(k, l) * W * svc.f_at(l, k) * gains.h2_at(k, n, l) / (h1 * kLn2);
                if (opts.strict_eq14_weights) term /= 1.0 + coeffs.lambda_user[k];
                wl += term;
            }
            w[static_cast<size_t>(n) * (L + 1) + l + 1] = wl;
        }
    }
    return w;
}

double bias_q(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
              const ApproxCoeffs& coeffs) {
    const int K = gains.num_users;
    const int L = gains.num_leds;
    const int eve = gains.eve_row();
    const int kstar = scene.target_user;
    const double W = scene.consts.bandwidth_hz;

    double q = 0.0;
    for (int k = 0; k < K; ++k) {
        const double lam = coeffs.lambda_user[k];
        for (int l = 0; l < L; ++l) {
            const double f = svc.f_at(l, k);
            if (f <= 0.0) continue;
            const double eta = coeffs.eta_at(k, l);
            const double xi = coeffs.xi_at(k, l);
            const double gamma = coeffs.gamma_at(k, l);
            if (gamma <= 0.0) throw std::runtime_error("bias_q: nonpositive LoS SINR component");
            const double taylor_const = W * eta * (-lam / ((1.0 + lam) * kLn2) + std::log2(1.0 + lam));
            q += f * (taylor_const + 0.5 * W * (xi + eta * std::log2(gamma)));
        }
    }
    for (int l = 0; l < L; ++l) {
        const double f = svc.f_at(l, kstar);
        if (f <= 0.0) continue;
        const double gamma = coeffs.gamma_at(eve, l);
        if (gamma <= 0.0) throw std::runtime_error("bias_q: nonpositive eavesdropper LoS SINR component");
        q -= f * 0.5 * W * (coeffs.xi_eve[l] + coeffs.eta_eve[l] * std::log2(gamma));
    }
    return q;
}

ApproxState build_approx(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                         const AssignmentMatrix& tangent_assignment, const ApproxOptions& opts) {
    ApproxState st;
    st.coeffs = approx_coeffs(gains, scene, svc, tangent_assignment, opts);
    st.weights = weight_matrix(gains, scene, svc, st.coeffs, opts);
    st.bias = bias_q(gains, scene, svc, st.coeffs);
    st.num_units = gains.num_units;
    st.num_leds = gains.num_leds;
    return st;
}

double linearized_rate(const ApproxState& state, const AssignmentMatrix& g) {
    if (g.num_units != state.num_units || g.num_leds != state.num_leds)
        throw std::invalid_argument("linearized_rate: dimension mismatch");
    double acc = state.bias;
    for (int n = 0; n < g.num_units; ++n)
        if (g.target[n] >= 0) acc += state.weight_at(n, g.target[n]);
    return acc;
}

} // namespace irsvlc
