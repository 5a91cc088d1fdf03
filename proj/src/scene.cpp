// SPDX-License-Identifier: Apache-2.0
#include "irsvlc/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace irsvlc {

using nlohmann::json;

void PhysConsts::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be strictly positive");
    };
    positive(pd_area_m2, "pd_area_m2");
    positive(lambertian_m, "lambertian_m");
    positive(optical_filter_gain, "optical_filter_gain");
    positive(refractive_index, "refractive_index");
    positive(pd_responsivity, "pd_responsivity");
    positive(noise_variance_w, "noise_variance_w");
    positive(bandwidth_hz, "bandwidth_hz");
    positive(unit_area_m2, "unit_area_m2");
    if (!(reflectance >= 0.0 && reflectance <= 1.0))
        throw std::invalid_argument("reflectance must lie in [0, 1]");
    if (!(fov_semiangle_rad > 0.0 && fov_semiangle_rad <= std::numbers::pi / 2.0))
        throw std::invalid_argument("fov_semiangle_rad must lie in (0, pi/2]");
}

namespace {

Vec3 parse_vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
        throw std::runtime_error(where + ": expected a [x, y, z] array of numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error(where + ": unknown key '" + it.key() + "'");
}

} // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scenario parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("scenario: top level must be an object");
    reject_unknown(j, {"room", "leds", "users", "eavesdropper", "irs", "consts"}, "scenario");

    ScenarioConfig cfg;
    if (j.contains("room")) {
        reject_unknown(j["room"], {"dims_m"}, "room");
        if (j["room"].contains("dims_m")) cfg.room_dims = parse_vec3(j["room"]["dims_m"], "room.dims_m");
    }
    if (!j.contains("leds") || !j["leds"].is_array() || j["leds"].empty())
        throw std::runtime_error("scenario: at least one LED is required");
    for (const auto& led : j["leds"]) {
        reject_unknown(led, {"pos_m", "power_dbw"}, "leds[]");
        if (!led.contains("pos_m")) throw std::runtime_error("leds[]: pos_m is required");
        cfg.led_pos.push_back(parse_vec3(led["pos_m"], "leds[].pos_m"));
        cfg.led_power_dbw.push_back(led.value("power_dbw", 10.0));
    }
    if (!j.contains("users") || !j["users"].is_array() || j["users"].empty())
        throw std::runtime_error("scenario: at least one user is required");
    for (const auto& user : j["users"]) {
        reject_unknown(user, {"pos_m"}, "users[]");
        if (!user.contains("pos_m")) throw std::runtime_error("users[]: pos_m is required");
        cfg.user_pos.push_back(parse_vec3(user["pos_m"], "users[].pos_m"));
    }
    if (!j.contains("eavesdropper"))
        throw std::runtime_error("scenario: eavesdropper block is required (secrecy undefined without it)");
    reject_unknown(j["eavesdropper"], {"pos_m", "target_user"}, "eavesdropper");
    if (!j["eavesdropper"].contains("pos_m"))
        throw std::runtime_error("eavesdropper: pos_m is required");
    cfg.eve_pos = parse_vec3(j["eavesdropper"]["pos_m"], "eavesdropper.pos_m");
    cfg.eve_target_user = j["eavesdropper"].value("target_user", 1);

    if (j.contains("irs")) {
        const auto& irs = j["irs"];
        reject_unknown(irs, {"wall", "spacing_m", "margin_h_m", "margin_v_m", "num_units", "reflectance"}, "irs");
        if (irs.value("wall", std::string("y0")) != "y0")
            throw std::runtime_error("irs.wall: only the y=0 wall is supported");
        cfg.spacing_m = irs.value("spacing_m", 0.2);
        cfg.margin_h_m = irs.value("margin_h_m", 1.0);
        cfg.margin_v_m = irs.value("margin_v_m", 0.3);
        cfg.num_units = irs.value("num_units", 0);
        cfg.reflectance = irs.value("reflectance", 0.5);
    }
    if (j.contains("consts")) {
        const auto& c = j["consts"];
        reject_unknown(c,
                       {"pd_area_m2", "lambertian_m", "optical_filter_gain", "fov_semiangle_deg",
                        "refractive_index", "pd_responsivity_a_per_w", "noise_variance_w", "bandwidth_hz",
                        "unit_area_m2"},
                       "consts");
        cfg.pd_area_m2 = c.value("pd_area_m2", cfg.pd_area_m2);
        cfg.lambertian_m = c.value("lambertian_m", cfg.lambertian_m);
        cfg.optical_filter_gain = c.value("optical_filter_gain", cfg.optical_filter_gain);
        cfg.fov_semiangle_deg = c.value("fov_semiangle_deg", cfg.fov_semiangle_deg);
        cfg.refractive_index = c.value("refractive_index", cfg.refractive_index);
        cfg.pd_responsivity = c.value("pd_responsivity_a_per_w", cfg.pd_responsivity);
        cfg.noise_variance_w = c.value("noise_variance_w", cfg.noise_variance_w);
        cfg.bandwidth_hz = c.value("bandwidth_hz", cfg.bandwidth_hz);
        cfg.unit_area_m2 = c.value("unit_area_m2", cfg.unit_area_m2);
    }
    return cfg;
}

int wall_capacity(const ScenarioConfig& cfg) {
    if (cfg.spacing_m <= 0.0) throw std::runtime_error("irs.spacing_m must be positive");
    const double span_x = cfg.room_dims.x - 2.0 * cfg.margin_h_m;
    const double span_z = cfg.room_dims.z - 2.0 * cfg.margin_v_m;
    if (span_x < 0.0 || span_z < 0.0) return 0;
    const int nx = static_cast<int>(std::floor(span_x / cfg.spacing_m + 1e-9)) + 1;
    const int nz = static_cast<int>(std::floor(span_z / cfg.spacing_m + 1e-9)) + 1;
    return nx * nz;
}

Scene build_scene(const ScenarioConfig& cfg) {
    Scene scene;
    scene.room_dims = cfg.room_dims;
    if (cfg.room_dims.x <= 0.0 || cfg.room_dims.y <= 0.0 || cfg.room_dims.z <= 0.0)
        throw std::runtime_error("room dimensions must be positive");

    scene.consts.pd_area_m2 = cfg.pd_area_m2;
    scene.consts.lambertian_m = cfg.lambertian_m;
    scene.consts.optical_filter_gain = cfg.optical_filter_gain;
    scene.consts.fov_semiangle_rad = cfg.fov_semiangle_deg * std::numbers::pi / 180.0;
    scene.consts.refractive_index = cfg.refractive_index;
    scene.consts.reflectance = cfg.reflectance;
    scene.consts.pd_responsivity = cfg.pd_responsivity;
    scene.consts.noise_variance_w = cfg.noise_variance_w;
    scene.consts.bandwidth_hz = cfg.bandwidth_hz;
    scene.consts.unit_area_m2 = cfg.unit_area_m2;
    scene.consts.validate();

    auto inside_room = [&](const Vec3& p) {
        return p.x >= 0.0 && p.x <= cfg.room_dims.x && p.y >= 0.0 && p.y <= cfg.room_dims.y && p.z >= 0.0 &&
               p.z <= cfg.room_dims.z;
    };

    if (cfg.led_pos.size() != cfg.led_power_dbw.size())
        throw std::runtime_error("led position/power lists disagree");
    for (size_t i = 0; i < cfg.led_pos.size(); ++i) {
        if (!inside_room(cfg.led_pos[i]))
            throw std::runtime_error("LED position outside the room bounding box");
        scene.led_pos.push_back(cfg.led_pos[i]);
        scene.led_power_w.push_back(std::pow(10.0, cfg.led_power_dbw[i] / 10.0));
    }
    for (const auto& p : cfg.user_pos) {
        if (!inside_room(p)) throw std::runtime_error("user position outside the room bounding box");
        scene.user_pos.push_back(p);
    }
    if (!inside_room(cfg.eve_pos)) throw std::runtime_error("eavesdropper position outside the room bounding box");
    scene.eve_pos = cfg.eve_pos;
    if (cfg.eve_target_user < 1 || cfg.eve_target_user > static_cast<int>(cfg.user_pos.size()))
        throw std::runtime_error("eavesdropper.target_user out of range");
    scene.target_user = cfg.eve_target_user - 1;

    if (cfg.num_units < 0) throw std::runtime_error("irs.num_units must be nonnegative");
    if (cfg.num_units > 0) {
        const int capacity = wall_capacity(cfg);
        if (cfg.num_units > capacity) {
            std::ostringstream os;
            os << "irs.num_units = " << cfg.num_units << " exceeds wall capacity " << capacity;
            throw std::runtime_error(os.str());
        }
        const double span_x = cfg.room_dims.x - 2.0 * cfg.margin_h_m;
        const int nx = static_cast<int>(std::floor(span_x / cfg.spacing_m + 1e-9)) + 1;
        // Top row first: units high on the wall see both the LEDs and the PD
        // plane; the lowest rows sit below the PDs and reflect nothing.
        int placed = 0;
        for (int row = 0; placed < cfg.num_units; ++row) {
            const double z = cfg.room_dims.z - cfg.margin_v_m - row * cfg.spacing_m;
            for (int col = 0; col < nx && placed < cfg.num_units; ++col, ++placed)
                scene.irs_units.push_back({cfg.margin_h_m + col * cfg.spacing_m, 0.0, z});
        }
    }

    std::set<std::tuple<double, double, double>> seen;
    auto check_dup = [&](const Vec3& p, const char* what) {
        if (!seen.insert({p.x, p.y, p.z}).second)
            throw std::runtime_error(std::string("duplicate position among ") + what);
    };
    for (const auto& p : scene.led_pos) check_dup(p, "LEDs/users/eavesdropper");
    for (const auto& p : scene.user_pos) check_dup(p, "LEDs/users/eavesdropper");
    check_dup(scene.eve_pos, "LEDs/users/eavesdropper");

    return scene;
}

std::string Scene::to_json() const {
    json j;
    auto vec = [](const Vec3& p) { return json::array({p.x, p.y, p.z}); };
    j["room_dims"] = vec(room_dims);
    j["led_pos"] = json::array();
    for (const auto& p : led_pos) j["led_pos"].push_back(vec(p));
    j["led_power_w"] = led_power_w;
    j["user_pos"] = json::array();
    for (const auto& p : user_pos) j["user_pos"].push_back(vec(p));
    j["eve_pos"] = vec(eve_pos);
    j["target_user"] = target_user;
    j["irs_units"] = json::array();
    for (const auto& p : irs_units) j["irs_units"].push_back(vec(p));
    j["consts"] = {{"pd_area_m2", consts.pd_area_m2},
                   {"lambertian_m", consts.lambertian_m},
                   {"optical_filter_gain", consts.optical_filter_gain},
                   {"fov_semiangle_rad", consts.fov_semiangle_rad},
                   {"refractive_index", consts.refractive_index},
                   {"reflectance", consts.reflectance},
                   {"pd_responsivity", consts.pd_responsivity},
                   {"noise_variance_w", consts.noise_variance_w},
                   {"bandwidth_hz", consts.bandwidth_hz},
                   {"unit_area_m2", consts.unit_area_m2}};
    return j.dump();
}

std::vector<double> service_probabilities(const Scene& scene) {
    const int L = scene.num_leds();
    const int K = scene.num_users();
    std::vector<double> f(static_cast<size_t>(L) * K, 0.0);
    for (int l = 0; l < L; ++l) {
        double total = 0.0;
        for (int k = 0; k < K; ++k) {
            const double d = distance(scene.led_pos[l], scene.user_pos[k]);
            if (d <= 0.0) throw std::runtime_error("coincident LED and user positions");
            f[static_cast<size_t>(l) * K + k] = 1.0 / (d * d);
            total += f[static_cast<size_t>(l) * K + k];
        }
        for (int k = 0; k < K; ++k) f[static_cast<size_t>(l) * K + k] /= total;
    }
    return f;
}

int complementary_led(const Scene& scene, int l) {
    const int L = scene.num_leds();
    if (L < 2) throw std::runtime_error("complementary LED undefined with a single transmitter");
    if (l < 0 || l >= L) throw std::out_of_range("LED index out of range");
    int best = -1, second = -1;
    for (int i = 0; i < L; ++i) {
        const double d = distance(scene.led_pos[i], scene.eve_pos);
        if (best < 0 || d < distance(scene.led_pos[best], scene.eve_pos)) {
            second = best;
            best = i;
        } else if (second < 0 || d < distance(scene.led_pos[second], scene.eve_pos)) {
            second = i;
        }
    }
    return best == l ? second : best;
}

ServiceModel build_service_model(const Scene& scene) {
    ServiceModel svc;
    svc.num_leds = scene.num_leds();
    svc.num_users = scene.num_users();
    svc.f = service_probabilities(scene);
    svc.l_c.resize(svc.num_leds, -1);
    if (svc.num_leds >= 2)
        for (int l = 0; l < svc.num_leds; ++l) svc.l_c[l] = complementary_led(scene, l);
    return svc;
}

} // namespace irsvlc
