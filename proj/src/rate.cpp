// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsvlc {

std::vector<int> AssignmentMatrix::column_sums() const {
    std::vector<int> sums(num_leds + 1, 0);
    for (int t : target)
        if (t >= 0) ++sums[t];
    return sums;
}

bool AssignmentMatrix::feasible() const {
    for (int t : target)
        if (t < 0 || t > num_leds) return false;
    const int quota = num_units / (num_leds + 1);
    for (int s : column_sums())
        if (s < quota) return false;
    return true;
}

double interference_plus_noise(const GainSet& gains, const Scene& scene, int receiver, int l) {
    const double rho = scene.consts.pd_responsivity;
    double acc = scene.consts.noise_variance_w;
    for (int i = 0; i < gains.num_leds; ++i) {
        if (i == l) continue;
        const double term = gains.h1_at(receiver, i) * scene.led_power_w[i];
        acc += rho * rho * term * term;
    }
    return acc;
}

double sinr(const GainSet& gains, const Scene& scene, const AssignmentMatrix& g, int k, int l) {
    const double rho = scene.consts.pd_responsivity;
    double aggregate = gains.h1_at(k, l);
    for (int n = 0; n < gains.num_units; ++n)
        if (g.target[n] == l + 1) aggregate += gains.h2_at(k, n, l);
    const double signal = rho * aggregate * scene.led_power_w[l];
    return signal * signal / interference_plus_noise(gains, scene, k, l);
}

double capacity_user(double sinr_value, double bandwidth_hz) {
    if (sinr_value < 0.0) throw std::invalid_argument("capacity_user: negative SINR");
    return 0.5 * bandwidth_hz * std::log2(1.0 + std::numbers::e / (2.0 * std::numbers::pi) * sinr_value);
}

double capacity_eve(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                    const AssignmentMatrix& g) {
    const double rho = scene.consts.pd_responsivity;
    const int eve = gains.eve_row();
    const int kstar = scene.target_user;
    double cap = 0.0;
    for (int l = 0; l < gains.num_leds; ++l) {
        double denom = interference_plus_noise(gains, scene, eve, l);
        const int lc = svc.l_c[l];
        if (lc >= 0) {
            double jam = 0.0;
            for (int n = 0; n < gains.num_units; ++n)
                if (g.target[n] == 0) jam += gains.h2_at(eve, n, lc);
            const double jam_sig = rho * scene.led_power_w[lc] * jam;
            denom += jam_sig * jam_sig;
        }
        const double sig = rho * gains.h1_at(eve, l) * scene.led_power_w[l];
        cap += svc.f_at(l, kstar) * capacity_user(sig * sig / denom, scene.consts.bandwidth_hz);
    }
    return cap;
}

RateReport secrecy_rate(const GainSet& gains, const Scene& scene, const ServiceModel& svc,
                        const AssignmentMatrix& g) {
    RateReport rep;
    rep.num_users = gains.num_users;
    rep.num_leds = gains.num_leds;
    rep.sinr.resize(static_cast<size_t>(rep.num_users) * rep.num_leds);
    rep.cap_user.resize(rep.sinr.size());
    double sum = 0.0;
    for (int k = 0; k < rep.num_users; ++k)
        for (int l = 0; l < rep.num_leds; ++l) {
            const double s = sinr(gains, scene, g, k, l);
            const double c = capacity_user(s, scene.consts.bandwidth_hz);
            rep.sinr[static_cast<size_t>(k) * rep.num_leds + l] = s;
            rep.cap_user[static_cast<size_t>(k) * rep.num_leds + l] = c;
            sum += svc.f_at(l, k) * c;
        }
    rep.cap_eve = capacity_eve(gains, scene, svc, g);
    rep.secrecy = sum - rep.cap_eve;
    return rep;
}

} // namespace irsvlc
