// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "amisac/params.hpp"

namespace amisac {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Signed minimum-image difference a-b on a ring of circumference `side`.
double wrapped_delta(double a, double b, double side);

/// Torus distance between two points of the wrap-around deployment square.
double wrapped_distance(const Vec2& a, const Vec2& b, double side);

/// Three-slope path loss in dB at ground distance d (meters):
/// constant below d0, 20 dB/decade between d0 and d1, 35 dB/decade above.
/// Throws std::domain_error for d <= 0.
double path_loss_db(double d, const SystemParams& params);

/// Linear large-scale gain 10^(pl_db/10) * 10^(sigma_sh*z/10), clamped away
/// from denormal underflow so downstream ratios stay finite.
double large_scale_coefficient(double pl_db, double shadow_z, double sigma_sh_db);

/// One drawn network geometry with every large-scale quantity the closed
/// forms consume. Small-scale fading is *not* part of a realization; it is
/// sampled per draw by the Monte-Carlo oracle.
struct NetworkRealization {
    std::vector<Vec2> cap_pos;     // communication APs
    std::vector<Vec2> stx_pos;     // transmit S-APs
    std::vector<Vec2> srx_pos;     // receive S-APs
    std::vector<Vec2> ue_pos;
    Vec2 monitor_pos;
    Vec2 target_ground;            // target is at (x, y, target_height)

    // large-scale Rayleigh gains (linear)
    Eigen::MatrixXd beta_cap_ue;   // m_c  x K
    Eigen::VectorXd beta_cap_pm;   // m_c
    Eigen::MatrixXd beta_stx_ue;   // m_st x K
    Eigen::VectorXd beta_stx_pm;   // m_st
    Eigen::VectorXd beta_pm_ue;    // K
    Eigen::VectorXd beta_pm_srx;   // m_sr
    Eigen::MatrixXd beta_cap_srx;  // m_c  x m_sr

    // LoS free-space gains toward the aerial target (linear)
    Eigen::VectorXd zeta_stx_t;    // m_st
    Eigen::VectorXd zeta_t_srx;    // m_sr
    Eigen::VectorXd zeta_t_ue;     // K
    double zeta_pm_t = 0.0;

    // departure angles toward the target (radians)
    Eigen::VectorXd az_stx_t, el_stx_t;  // m_st
    Eigen::VectorXd az_srx_t, el_srx_t;  // m_sr
    double az_pm_t = 0.0, el_pm_t = 0.0;

    double alpha = 0.0;    // target reflection gain
    double d_pm_t = 0.0;   // 3-D monitor-target distance
};

/// Pure function of (params.seed, index): APs and UEs uniform over the
/// wrap-around square, target at the area center at target_height, monitor
/// uniform in the disc of monitor_radius around the target's ground point.
NetworkRealization generate_realization(const SystemParams& params, std::uint64_t index);

}  // namespace amisac
