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

#include "amisac/estimation.hpp"
#include "amisac/params.hpp"
#include "amisac/scenario.hpp"

namespace amisac {

/// AP-side power control coefficients (the malicious network transmits at
/// full power; the monitor's split is a PowerAllocation).
struct PowerControl {
    Eigen::MatrixXd eta_c;  // m_c x K
    Eigen::VectorXd eta_s;  // m_st
};

/// eta_c(m,k) = 1 / (N * sum_k gamma(m,k)); eta_s(m') = 1 / (N * zeta(m')).
PowerControl default_ap_power_control(const NetworkRealization& real,
                                      const EstimationStats& stats,
                                      const SystemParams& params);

/// The monitor's jamming split. theta_t and theta_1 are the dimensionless
/// shares of the (target, UE 1) beams; theta_t + theta_1 <= 1 spends at most
/// the full normalized budget rho_pm.
struct PowerAllocation {
    double theta_t = 0.0;
    double theta_1 = 0.0;
    double rho_pm = 0.0;
};

/// Equal split of the full budget between the two jamming beams.
PowerAllocation epa_allocation(double rho_pm);

/// Named powers of one receiver's signal decomposition; sinr() is the ratio
/// of the desired power to everything else.
struct SinrBreakdown {
    double ds = 0.0;     // |desired signal|^2
    double bu = 0.0;     // beamforming-uncertainty power
    double iu = 0.0;     // inter-UE interference, summed over interferers
    double is_ = 0.0;    // probing-signal interference
    double js_s = 0.0;   // jamming beam aimed at the target
    double js_c = 0.0;   // jamming beam aimed at UE 1
    double noise = 0.0;

    double denominator() const { return bu + iu + is_ + js_s + js_c + noise; }
    double sinr() const { return ds / denominator(); }
};

/// Closed-form effective SINR of UE k (0-based; UE 1 is k == 0).
SinrBreakdown sinr_ue(int k, const NetworkRealization& real, const EstimationStats& stats,
                      const PowerAllocation& alloc, const PowerControl& eta,
                      const SystemParams& params);

/// Closed-form SINR of UE 1's signal at the full-duplex monitor. The
/// beamforming-uncertainty term uses the large-network Gaussian
/// approximation; every other term is exact.
SinrBreakdown sinr_monitor(const NetworkRealization& real, const EstimationStats& stats,
                           const PowerAllocation& alloc, const PowerControl& eta,
                           const SystemParams& params);

/// Closed-form sensing SINR at the malicious CPU after echo combining.
SinrBreakdown sinr_cpu(const NetworkRealization& real, const EstimationStats& stats,
                       const PowerAllocation& alloc, const PowerControl& eta,
                       const SystemParams& params);

/// The twelve constants that make both monitor power-allocation problems
/// linear in (theta_t, theta_1):
///   SINR at monitor  = q1 / (q2*theta_t + q3*theta_1 + q4)
///   SINR at UE 1     = q5 / (q6*theta_t + q7*theta_1 + q8)
///   SINR at CPU      = q9 / (q10*theta_t + q11*theta_1 + q12)
struct QCoefficients {
    double q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0, q6 = 0;
    double q7 = 0, q8 = 0, q9 = 0, q10 = 0, q11 = 0, q12 = 0;
    double rho_pm = 0;  // the normalized budget the q's were built with

    double sinr_cpu_at(double theta_t, double theta_1) const {
        return q9 / (q10 * theta_t + q11 * theta_1 + q12);
    }
    double sinr_monitor_at(double theta_t, double theta_1) const {
        return q1 / (q2 * theta_t + q3 * theta_1 + q4);
    }
    double sinr_ue1_at(double theta_t, double theta_1) const {
        return q5 / (q6 * theta_t + q7 * theta_1 + q8);
    }
};

QCoefficients q_coefficients(const NetworkRealization& real, const EstimationStats& stats,
                             const PowerControl& eta, double rho_pm,
                             const SystemParams& params);

/// Limits as the monitor array grows without bound while its transmit power
/// is scaled down as p_pm_fixed / n_pm, under the equal split.
struct UeAsymptotics {
    double js_s = 0.0;   // residual target-beam jamming power at the UE
    double js_c = 0.0;   // residual UE-beam jamming power at the UE
    double sinr = 0.0;
};
UeAsymptotics asymptotic_ue_limit(int k, const NetworkRealization& real,
                                  const EstimationStats& stats, const PowerControl& eta,
                                  const SystemParams& params, double p_pm_fixed);

double asymptotic_sinr_monitor_limit(const NetworkRealization& real,
                                     const EstimationStats& stats, const PowerControl& eta,
                                     const SystemParams& params);

double asymptotic_sinr_cpu_limit(const NetworkRealization& real, const EstimationStats& stats,
                                 const PowerControl& eta, const SystemParams& params,
                                 double p_pm_fixed);

}  // namespace amisac
