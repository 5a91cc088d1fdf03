// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsvlc {

namespace {

double concentrator_gain(double cos_phi, const PhysConsts& c) {
    // phi <= Phi inside the FoV; cos is monotone decreasing on [0, pi].
    if (cos_phi < std::cos(c.fov_semiangle_rad)) return 0.0;
    const double s = std::sin(c.fov_semiangle_rad);
    return c.refractive_index * c.refractive_index / (s * s);
}

double lambertian(double area_factor, double inv_sq, double cos_theta, double cos_phi, const PhysConsts& c) {
    if (cos_theta <= 0.0 || cos_phi <= 0.0) return 0.0;
    const double f = concentrator_gain(cos_phi, c);
    if (f == 0.0) return 0.0;
    return area_factor * inv_sq * std::pow(cos_theta, c.lambertian_m) * c.optical_filter_gain * cos_phi * f;
}

} // namespace

double los_gain(const Vec3& led, const Vec3& pd, const PhysConsts& consts) {
    const double d = distance(led, pd);
    if (d <= 0.0) throw std::invalid_argument("los_gain: coincident LED and PD");
    const double cos_theta = (led.z - pd.z) / d;   // LED normal (0,0,-1)
    const double cos_phi = (led.z - pd.z) / d;     // PD normal (0,0,1)
    const double area = consts.pd_area_m2 * (consts.lambertian_m + 1.0) / (2.0 * std::numbers::pi);
    return lambertian(area, 1.0 / (d * d), cos_theta, cos_phi, consts);
}

double nlos_gain(const Vec3& led, const Vec3& unit, const Vec3& pd, const PhysConsts& consts) {
    const double d_nl = distance(led, unit);
    const double d_kn = distance(pd, unit);
    if (d_nl <= 0.0 || d_kn <= 0.0) throw std::invalid_argument("nlos_gain: zero segment length");
    const double cos_theta = (led.z - unit.z) / d_nl;
    const double cos_phi = (unit.z - pd.z) / d_kn;
    const double total = d_nl + d_kn;
    const double area = consts.pd_area_m2 * (consts.lambertian_m + 1.0) / (2.0 * std::numbers::pi);
    return consts.reflectance * lambertian(area, 1.0 / (total * total), cos_theta, cos_phi, consts);
}

GainSet gain_set(const Scene& scene) {
    GainSet g;
    g.num_users = scene.num_users();
    g.num_units = scene.num_units();
    g.num_leds = scene.num_leds();
    const int R = g.num_users + 1;
    g.h1.assign(static_cast<size_t>(R) * g.num_leds, 0.0);
    g.h2.assign(static_cast<size_t>(R) * g.num_units * g.num_leds, 0.0);

    for (int r = 0; r < R; ++r) {
        const Vec3& pd = r < g.num_users ? scene.user_pos[r] : scene.eve_pos;
        for (int l = 0; l < g.num_leds; ++l) {
            g.h1[static_cast<size_t>(r) * g.num_leds + l] = los_gain(scene.led_pos[l], pd, scene.consts);
            for (int n = 0; n < g.num_units; ++n)
                g.h2[(static_cast<size_t>(r) * g.num_units + n) * g.num_leds + l] =
                    nlos_gain(scene.led_pos[l], scene.irs_units[n], pd, scene.consts);
        }
    }
    return g;
}

void write_gains_csv(const GainSet& gains, std::ostream& out) {
    out << "receiver,unit,led,gain\n";
    char buf[64];
    for (int r = 0; r <= gains.num_users; ++r)
        for (int l = 0; l < gains.num_leds; ++l) {
            std::snprintf(buf, sizeof buf, "%.12e", gains.h1_at(r, l));
            out << r << ",-1," << l << ',' << buf << '\n';
        }
    for (int r = 0; r <= gains.num_users; ++r)
        for (int n = 0; n < gains.num_units; ++n)
            for (int l = 0; l < gains.num_leds; ++l) {
                std::snprintf(buf, sizeof buf, "%.12e", gains.h2_at(r, n, l));
                out << r << ',' << n << ',' << l << ',' << buf << '\n';
            }
}

} // namespace irsvlc
