// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace irsvlc;

namespace {

struct PaperScene {
    Scene scene;
    GainSet gains;
    ServiceModel svc;
};

PaperScene paper_scene(int num_units = 64) {
    ScenarioConfig cfg = irsvlc::testing::paper_config();
    cfg.num_units = num_units;
    PaperScene ps{build_scene(cfg), {}, {}};
    ps.gains = gain_set(ps.scene);
    ps.svc = build_service_model(ps.scene);
    return ps;
}

} // namespace

TEST_CASE("interference plus noise") {
    const PaperScene ps = paper_scene();
    SUBCASE("single LED leaves only the noise floor") {
        ScenarioConfig cfg = irsvlc::testing::random_config(5, 1, 2, 0);
        const Scene s = build_scene(cfg);
        const GainSet g = gain_set(s);
        CHECK(interference_plus_noise(g, s, 0, 0) == doctest::Approx(s.consts.noise_variance_w));
    }
    SUBCASE("zero emission power leaves only the noise floor") {
        ScenarioConfig cfg = irsvlc::testing::paper_config();
        for (double& p : cfg.led_power_dbw) p = -1e9;
        const Scene s = build_scene(cfg);
        const GainSet g = gain_set(s);
        CHECK(interference_plus_noise(g, s, 0, 0) == doctest::Approx(s.consts.noise_variance_w));
    }
    SUBCASE("matches the three-interferer hand sum for user 1, LED 1") {
        const double rho = ps.scene.consts.pd_responsivity;
        double expected = ps.scene.consts.noise_variance_w;
        for (int i = 1; i < 4; ++i) {
            const double t = ps.gains.h1_at(0, i) * ps.scene.led_power_w[i];
            expected += rho * rho * t * t;
        }
        CHECK(interference_plus_noise(ps.gains, ps.scene, 0, 0) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("SINR") {
    const PaperScene ps = paper_scene();
    SUBCASE("zero assignment reduces to the LoS-only SINR") {
        const auto g0 = AssignmentMatrix::zero(64, 4);
        const double rho = ps.scene.consts.pd_responsivity;
        const double sig = rho * ps.gains.h1_at(0, 0) * ps.scene.led_power_w[0];
        CHECK(sinr(ps.gains, ps.scene, g0, 0, 0) ==
              doctest::Approx(sig * sig / interference_plus_noise(ps.gains, ps.scene, 0, 0)));
    }
    SUBCASE("assigning one extra unit never decreases the SINR") {
        AssignmentMatrix g = AssignmentMatrix::zero(64, 4);
        double prev = sinr(ps.gains, ps.scene, g, 0, 0);
        for (int n = 0; n < 64; n += 7) {
            g.target[n] = 1;
            const double cur = sinr(ps.gains, ps.scene, g, 0, 0);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
    SUBCASE("hand check on a 1-LED, 1-unit scene") {
        const ScenarioConfig cfg = irsvlc::testing::random_config(21, 1, 1, 1);
        const Scene s = build_scene(cfg);
        const GainSet g = gain_set(s);
        AssignmentMatrix a = AssignmentMatrix::zero(1, 1);
        a.target[0] = 1;
        const double rho = s.consts.pd_responsivity;
        const double sig = rho * (g.h1_at(0, 0) + g.h2_at(0, 0, 0)) * s.led_power_w[0];
        CHECK(sinr(g, s, a, 0, 0) == doctest::Approx(sig * sig / s.consts.noise_variance_w));
    }
}

TEST_CASE("user capacity") {
    const double W = 2e7;
    CHECK(capacity_user(0.0, W) == 0.0);
    // gamma = 2pi/e makes the log argument exactly 2
    CHECK(capacity_user(2.0 * std::numbers::pi / std::numbers::e, W) == doctest::Approx(W / 2.0));
    // frozen from an independent evaluation
    CHECK(capacity_user(10.0, W) == doctest::Approx(2.413128244477e7).epsilon(1e-10));
    CHECK_THROWS_AS(capacity_user(-1.0, W), std::invalid_argument);
}

TEST_CASE("eavesdropper capacity") {
    const PaperScene ps = paper_scene(8);
    const auto none = AssignmentMatrix::zero(8, 4);
    const double ce_clear = capacity_eve(ps.gains, ps.scene, ps.svc, none);
    SUBCASE("no jamming reduces to the LoS SINR expression") {
        // frozen from an independent evaluation of the paper-room scenario
        CHECK(ce_clear == doctest::Approx(1.546649073208e7).epsilon(1e-9));
    }
    SUBCASE("jamming monotonically degrades the eavesdropper") {
        AssignmentMatrix g = AssignmentMatrix::zero(8, 4);
        double prev = ce_clear;
        for (int n = 0; n < 8; ++n) {
            g.target[n] = 0;
            const double cur = capacity_eve(ps.gains, ps.scene, ps.svc, g);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
        // all units jamming: frozen independent value, strictly below no-jam
        CHECK(prev == doctest::Approx(1.519645374484e7).epsilon(1e-9));
        CHECK(prev < ce_clear);
    }
}

TEST_CASE("secrecy rate") {
    SUBCASE("no-IRS value is independent of reflectance and unit count") {
        double reference = 0.0;
        bool first = true;
        for (auto [n, delta] : {std::pair{0, 0.5}, {8, 0.5}, {64, 0.1}, {64, 0.9}}) {
            ScenarioConfig cfg = irsvlc::testing::paper_config();
            cfg.num_units = n;
            cfg.reflectance = delta;
            const Scene s = build_scene(cfg);
            const GainSet g = gain_set(s);
            const ServiceModel svc = build_service_model(s);
            const RateReport rep = secrecy_rate(g, s, svc, AssignmentMatrix::zero(n, 4));
            if (first) {
                reference = rep.secrecy;
                first = false;
                // frozen from an independent evaluation at P = 10 dBW
                CHECK(reference == doctest::Approx(2.784629e7).epsilon(1e-6));
            } else {
                CHECK(rep.secrecy == doctest::Approx(reference).epsilon(1e-12));
            }
        }
    }
    SUBCASE("report is internally consistent") {
        const PaperScene ps = paper_scene();
        const AssignmentMatrix g = random_assignment(ps.scene, 3);
        const RateReport rep = secrecy_rate(ps.gains, ps.scene, ps.svc, g);
        double acc = 0.0;
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                CHECK(rep.sinr_at(k, l) >= 0.0);
                CHECK(rep.cap_at(k, l) ==
                      doctest::Approx(capacity_user(rep.sinr_at(k, l), ps.scene.consts.bandwidth_hz)));
                acc += ps.svc.f_at(l, k) * rep.cap_at(k, l);
            }
        CHECK(rep.secrecy == doctest::Approx(acc - rep.cap_eve));
    }
    SUBCASE("same inputs give bit-identical outputs") {
        const PaperScene ps = paper_scene();
        const AssignmentMatrix g = random_assignment(ps.scene, 17);
        const RateReport a = secrecy_rate(ps.gains, ps.scene, ps.svc, g);
        const RateReport b = secrecy_rate(ps.gains, ps.scene, ps.svc, g);
        CHECK(a.secrecy == b.secrecy);
        CHECK(a.cap_eve == b.cap_eve);
        CHECK(a.sinr == b.sinr);
    }
}

TEST_CASE("assignment matrix constraints") {
    AssignmentMatrix g = AssignmentMatrix::zero(7, 2);
    CHECK_FALSE(g.feasible());   // unassigned rows violate the row-sum constraint
    for (int n = 0; n < 7; ++n) g.target[n] = n % 3;
    CHECK(g.feasible());
    const auto sums = g.column_sums();
    CHECK(sums[0] + sums[1] + sums[2] == 7);
    g.target[6] = 0;
    g.target[5] = 0;   // column 2 drops below floor(7/3) = 2
    CHECK_FALSE(g.feasible());
}
