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
#include <utility>

#include "amisac/params.hpp"
#include "amisac/rng.hpp"
#include "amisac/scenario.hpp"

namespace amisac {

/// Per-(C-AP, UE) variance of the MMSE channel estimate. The monitor spoofs
/// UE 1's pilot, so gamma(m, 0) is degraded by the spoofing term while all
/// other columns are untouched.
struct EstimationStats {
    Eigen::MatrixXd gamma;  // m_c x K, linear
};

/// MMSE estimate variance for link (m, k); k is 0-based, UE 1 is k == 0.
double gamma_coefficient(int m, int k, const NetworkRealization& real,
                         const SystemParams& params);

EstimationStats compute_estimation_stats(const NetworkRealization& real,
                                         const SystemParams& params);

/// Scalar MMSE gain applied to the despread pilot observation of link (m, k).
double mmse_gain(int m, int k, const NetworkRealization& real, const SystemParams& params);

/// Estimate from an externally drawn true channel and spoofing channel, so
/// callers can keep the spoofing channel consistent with later combining.
/// spoof may be null for k != 0 (it is ignored there).
Eigen::VectorXcd mmse_estimate_from_pilot(const Eigen::VectorXcd& g_true,
                                          const Eigen::MatrixXcd* spoof_channel,
                                          int m, int k,
                                          const NetworkRealization& real,
                                          const SystemParams& params, Rng& rng);

/// Draws fresh channels and noise and returns (estimate, estimation error).
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> sample_mmse_estimate(
    int m, int k, const NetworkRealization& real, const SystemParams& params, Rng& rng);

}  // namespace amisac
