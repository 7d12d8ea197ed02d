// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/scenario.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "amisac/rng.hpp"

namespace amisac {

double wrapped_delta(double a, double b, double side) {
    double d = std::fmod(a - b, side);
    if (d > side / 2.0) d -= side;
    if (d < -side / 2.0) d += side;
    return d;
}

double wrapped_distance(const Vec2& a, const Vec2& b, double side) {
    const double dx = wrapped_delta(a.x, b.x, side);
    const double dy = wrapped_delta(a.y, b.y, side);
    return std::hypot(dx, dy);
}

double path_loss_db(double d, const SystemParams& params) {
    if (d <= 0.0) throw std::domain_error("path_loss_db: distance must be positive");
    const double L = params.pl_const;
    if (d <= params.d0)
        return -L - 15.0 * std::log10(params.d1) - 20.0 * std::log10(params.d0);
    if (d <= params.d1)
        return -L - 15.0 * std::log10(params.d1) - 20.0 * std::log10(d);
    return -L - 35.0 * std::log10(d);
}

namespace {
std::atomic<long> g_clamp_warnings{0};
constexpr double kBetaFloor = 1e-30;
}  // namespace

double large_scale_coefficient(double pl_db, double shadow_z, double sigma_sh_db) {
    const double beta =
        std::pow(10.0, pl_db / 10.0) * std::pow(10.0, sigma_sh_db * shadow_z / 10.0);
    if (beta < kBetaFloor) {
        if (g_clamp_warnings.fetch_add(1) == 0)
            std::cerr << "amisac: large-scale gain underflow, clamping to " << kBetaFloor
                      << " (further clamps not reported)\n";
        return kBetaFloor;
    }
    return beta;
}

namespace {

// Large-scale gain of one ground link; shadowing only beyond the second
// breakpoint, where the model leaves line-of-sight dominance.
double ground_beta(double d, const SystemParams& p, Rng& rng) {
    const double z = (d > p.d1) ? rng.gaussian() : 0.0;
    return large_scale_coefficient(path_loss_db(d, p), z, p.sigma_sh);
}

struct TargetLink {
    double zeta;
    double azimuth;
    double elevation;
    double dist3d;
};

TargetLink target_link(const Vec2& node, const Vec2& target_ground, const SystemParams& p) {
    const double dx = wrapped_delta(target_ground.x, node.x, p.area_side);
    const double dy = wrapped_delta(target_ground.y, node.y, p.area_side);
    const double ground = std::hypot(dx, dy);
    const double d3 = std::hypot(ground, p.target_height);
    TargetLink link;
    link.dist3d = d3;
    link.zeta = std::pow(p.wavelength() / (4.0 * M_PI * d3), p.fsl_exponent);
    link.azimuth = std::atan2(dy, dx);
    link.elevation = std::atan2(p.target_height, ground);
    return link;
}

}  // namespace

NetworkRealization generate_realization(const SystemParams& p, std::uint64_t index) {
    p.validate();
    Rng rng = Rng::substream(p.seed, index);
    NetworkRealization r;

    auto draw_point = [&]() -> Vec2 {
        return {rng.uniform() * p.area_side, rng.uniform() * p.area_side};
    };

    r.cap_pos.resize(p.m_c);
    for (auto& pos : r.cap_pos) pos = draw_point();
    r.stx_pos.resize(p.m_st);
    for (auto& pos : r.stx_pos) pos = draw_point();
    r.srx_pos.resize(p.m_sr);
    for (auto& pos : r.srx_pos) pos = draw_point();

    auto collides_with_ap = [&](const Vec2& u) {
        auto same = [&](const Vec2& a) { return a.x == u.x && a.y == u.y; };
        for (const auto& a : r.cap_pos)
            if (same(a)) return true;
        for (const auto& a : r.stx_pos)
            if (same(a)) return true;
        for (const auto& a : r.srx_pos)
            if (same(a)) return true;
        return false;
    };
    r.ue_pos.resize(p.k_ues);
    for (auto& pos : r.ue_pos) {
        do {
            pos = draw_point();
        } while (collides_with_ap(pos));
    }

    r.target_ground = {p.area_side / 2.0, p.area_side / 2.0};

    // uniform over the disc around the target's ground projection
    {
        const double rad = p.monitor_radius * std::sqrt(rng.uniform());
        const double ang = 2.0 * M_PI * rng.uniform();
        r.monitor_pos = {r.target_ground.x + rad * std::cos(ang),
                         r.target_ground.y + rad * std::sin(ang)};
        // wrap back into the square (only matters for huge radii)
        r.monitor_pos.x = std::fmod(std::fmod(r.monitor_pos.x, p.area_side) + p.area_side, p.area_side);
        r.monitor_pos.y = std::fmod(std::fmod(r.monitor_pos.y, p.area_side) + p.area_side, p.area_side);
    }

    auto dist = [&](const Vec2& a, const Vec2& b) { return wrapped_distance(a, b, p.area_side); };

    r.beta_cap_ue.resize(p.m_c, p.k_ues);
    for (int m = 0; m < p.m_c; ++m)
        for (int k = 0; k < p.k_ues; ++k)
            r.beta_cap_ue(m, k) = ground_beta(dist(r.cap_pos[m], r.ue_pos[k]), p, rng);

    r.beta_cap_pm.resize(p.m_c);
    for (int m = 0; m < p.m_c; ++m)
        r.beta_cap_pm(m) = ground_beta(dist(r.cap_pos[m], r.monitor_pos), p, rng);

    r.beta_stx_ue.resize(p.m_st, p.k_ues);
    for (int m = 0; m < p.m_st; ++m)
        for (int k = 0; k < p.k_ues; ++k)
            r.beta_stx_ue(m, k) = ground_beta(dist(r.stx_pos[m], r.ue_pos[k]), p, rng);

    r.beta_stx_pm.resize(p.m_st);
    for (int m = 0; m < p.m_st; ++m)
        r.beta_stx_pm(m) = ground_beta(dist(r.stx_pos[m], r.monitor_pos), p, rng);

    r.beta_pm_ue.resize(p.k_ues);
    for (int k = 0; k < p.k_ues; ++k)
        r.beta_pm_ue(k) = ground_beta(dist(r.monitor_pos, r.ue_pos[k]), p, rng);

    r.beta_pm_srx.resize(p.m_sr);
    for (int m = 0; m < p.m_sr; ++m)
        r.beta_pm_srx(m) = ground_beta(dist(r.monitor_pos, r.srx_pos[m]), p, rng);

    r.beta_cap_srx.resize(p.m_c, p.m_sr);
    for (int m = 0; m < p.m_c; ++m)
        for (int j = 0; j < p.m_sr; ++j)
            r.beta_cap_srx(m, j) = ground_beta(dist(r.cap_pos[m], r.srx_pos[j]), p, rng);

    r.zeta_stx_t.resize(p.m_st);
    r.az_stx_t.resize(p.m_st);
    r.el_stx_t.resize(p.m_st);
    for (int m = 0; m < p.m_st; ++m) {
        const TargetLink link = target_link(r.stx_pos[m], r.target_ground, p);
        r.zeta_stx_t(m) = link.zeta;
        r.az_stx_t(m) = link.azimuth;
        r.el_stx_t(m) = link.elevation;
    }

    r.zeta_t_srx.resize(p.m_sr);
    r.az_srx_t.resize(p.m_sr);
    r.el_srx_t.resize(p.m_sr);
    for (int m = 0; m < p.m_sr; ++m) {
        const TargetLink link = target_link(r.srx_pos[m], r.target_ground, p);
        r.zeta_t_srx(m) = link.zeta;
        r.az_srx_t(m) = link.azimuth;
        r.el_srx_t(m) = link.elevation;
    }

    r.zeta_t_ue.resize(p.k_ues);
    for (int k = 0; k < p.k_ues; ++k)
        r.zeta_t_ue(k) = target_link(r.ue_pos[k], r.target_ground, p).zeta;

    {
        const TargetLink link = target_link(r.monitor_pos, r.target_ground, p);
        r.zeta_pm_t = link.zeta;
        r.az_pm_t = link.azimuth;
        r.el_pm_t = link.elevation;
        r.d_pm_t = link.dist3d;
    }

    r.alpha = p.reflection_gain();
    return r;
}

}  // namespace amisac
