// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>

#include "amisac/rng.hpp"
#include "amisac/scenario.hpp"

using namespace amisac;

namespace {

// brute-force reference: minimum over the nine shifted copies of b
double nine_image_distance(const Vec2& a, const Vec2& b, double side) {
    double best = 1e300;
    for (int ix = -1; ix <= 1; ++ix)
        for (int iy = -1; iy <= 1; ++iy)
            best = std::min(best, std::hypot(a.x - (b.x + ix * side), a.y - (b.y + iy * side)));
    return best;
}

SystemParams small_params() {
    SystemParams p;
    p.m_c = 6;
    p.m_st = 2;
    p.m_sr = 2;
    p.k_ues = 3;
    p.n_ap = 2;
    p.n_pm = 4;
    p.tau_p = 3;
    return p;
}

}  // namespace

TEST_CASE("wrapped distance basics") {
    CHECK(wrapped_distance({100, 100}, {100, 100}, 2000) == 0.0);
    CHECK(wrapped_distance({0, 0}, {1999, 0}, 2000) == doctest::Approx(1.0));
}

TEST_CASE("wrapped distance equals nine-image brute force") {
    Rng rng(7);
    const double side = 2000.0;
    for (int i = 0; i < 500; ++i) {
        const Vec2 a{rng.uniform() * side, rng.uniform() * side};
        const Vec2 b{rng.uniform() * side, rng.uniform() * side};
        const double d = wrapped_distance(a, b, side);
        CHECK(d == doctest::Approx(nine_image_distance(a, b, side)).epsilon(1e-12));
        CHECK(d <= side / std::sqrt(2.0) + 1e-9);
    }
}

TEST_CASE("wrapped distance is a torus metric on random triples") {
    Rng rng(11);
    const double side = 1000.0;
    for (int i = 0; i < 300; ++i) {
        const Vec2 a{rng.uniform() * side, rng.uniform() * side};
        const Vec2 b{rng.uniform() * side, rng.uniform() * side};
        const Vec2 c{rng.uniform() * side, rng.uniform() * side};
        CHECK(wrapped_distance(a, b, side) == doctest::Approx(wrapped_distance(b, a, side)));
        CHECK(wrapped_distance(a, c, side) <=
              wrapped_distance(a, b, side) + wrapped_distance(b, c, side) + 1e-9);
    }
}

TEST_CASE("three-slope path loss") {
    SystemParams p = small_params();
    p.pl_const = 140.7;
    p.d0 = 10.0;
    p.d1 = 50.0;
    CHECK(path_loss_db(p.d0 / 2, p) == path_loss_db(p.d0, p));
    CHECK(path_loss_db(10.0 * p.d1, p) - path_loss_db(p.d1, p) == doctest::Approx(-35.0));
    CHECK(path_loss_db(100.0, p) == doctest::Approx(-210.7));
    CHECK_THROWS_AS(path_loss_db(0.0, p), std::domain_error);
    CHECK_THROWS_AS(path_loss_db(-3.0, p), std::domain_error);
}

TEST_CASE("large-scale coefficient definition") {
    CHECK(large_scale_coefficient(-100.0, 0.0, 9.0) == doctest::Approx(1e-10));
    CHECK(large_scale_coefficient(-100.0, 1.0, 9.0) ==
          doctest::Approx(1e-10 * std::pow(10.0, 0.9)));
}

TEST_CASE("shadowing is zero-mean in dB over an ensemble") {
    Rng rng(3);
    const double pl_db = -80.0;
    double acc = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        acc += 10.0 * std::log10(large_scale_coefficient(pl_db, rng.gaussian(), 9.0));
    CHECK(acc / n == doctest::Approx(pl_db).epsilon(0.00125));  // 0.1 dB on 80 dB
}

TEST_CASE("degenerate disc puts the monitor on the target ground point") {
    SystemParams p = small_params();
    p.monitor_radius = 0.0;
    const NetworkRealization r = generate_realization(p, 0);
    CHECK(r.monitor_pos.x == doctest::Approx(p.area_side / 2));
    CHECK(r.monitor_pos.y == doctest::Approx(p.area_side / 2));
    CHECK(r.d_pm_t == doctest::Approx(p.target_height));
}

TEST_CASE("realizations are a pure function of (seed, index)") {
    SystemParams p = small_params();
    const NetworkRealization a = generate_realization(p, 5);
    const NetworkRealization b = generate_realization(p, 5);
    CHECK(a.monitor_pos.x == b.monitor_pos.x);
    CHECK((a.beta_cap_ue - b.beta_cap_ue).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.beta_cap_srx - b.beta_cap_srx).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.zeta_stx_t - b.zeta_stx_t).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.zeta_pm_t == b.zeta_pm_t);

    const NetworkRealization c = generate_realization(p, 6);
    CHECK(a.monitor_pos.x != c.monitor_pos.x);
}

TEST_CASE("monitor is uniform over the disc: mean ground distance is 2r/3") {
    SystemParams p = small_params();
    p.area_side = 2000.0;
    p.target_height = 500.0;
    p.monitor_radius = 300.0;
    double acc = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const NetworkRealization r = generate_realization(p, i);
        acc += wrapped_distance(r.monitor_pos, r.target_ground, p.area_side);
    }
    CHECK(acc / n == doctest::Approx(2.0 / 3.0 * p.monitor_radius).epsilon(0.02));
}

TEST_CASE("all nodes land inside the square and the monitor inside its disc") {
    SystemParams p = small_params();
    for (int i = 0; i < 50; ++i) {
        const NetworkRealization r = generate_realization(p, i);
        auto inside = [&](const Vec2& v) {
            return v.x >= 0 && v.x < p.area_side && v.y >= 0 && v.y < p.area_side;
        };
        for (const auto& v : r.cap_pos) CHECK(inside(v));
        for (const auto& v : r.ue_pos) CHECK(inside(v));
        CHECK(wrapped_distance(r.monitor_pos, r.target_ground, p.area_side) <=
              p.monitor_radius + 1e-9);
        CHECK(r.beta_cap_ue.minCoeff() > 0.0);
        CHECK(r.zeta_stx_t.minCoeff() > 0.0);
    }
}

TEST_CASE("LoS gain decreases with distance and alpha matches the cross-section") {
    SystemParams p = small_params();
    const NetworkRealization r = generate_realization(p, 1);
    // recompute zeta at a doubled height: strictly smaller
    SystemParams higher = p;
    higher.target_height = 2 * p.target_height;
    const NetworkRealization r2 = generate_realization(higher, 1);
    CHECK(r2.zeta_pm_t < r.zeta_pm_t);

    const double lambda = p.wavelength();
    CHECK(r.alpha * lambda * lambda / (4.0 * M_PI) == doctest::Approx(p.sigma_rcs).epsilon(1e-12));
}
