// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "amisac/channels.hpp"

namespace amisac {

namespace {
// Denominator of the MMSE gain: pilot energy plus (for the spoofed UE 1)
// the monitor's spoofing energy plus unit noise.
double mmse_denominator(int m, int k, const NetworkRealization& real,
                        const SystemParams& p) {
    const double tp = static_cast<double>(p.tau_p);
    double den = tp * p.rho_p() * real.beta_cap_ue(m, k) + 1.0;
    if (k == 0) den += tp * p.rho_p_pm() * real.beta_cap_pm(m) * p.n_pm;
    return den;
}
}  // namespace

double gamma_coefficient(int m, int k, const NetworkRealization& real,
                         const SystemParams& p) {
    const double tp = static_cast<double>(p.tau_p);
    const double beta = real.beta_cap_ue(m, k);
    return tp * p.rho_p() * beta * beta / mmse_denominator(m, k, real, p);
}

EstimationStats compute_estimation_stats(const NetworkRealization& real,
                                         const SystemParams& p) {
    EstimationStats stats;
    stats.gamma.resize(p.m_c, p.k_ues);
    for (int m = 0; m < p.m_c; ++m)
        for (int k = 0; k < p.k_ues; ++k) stats.gamma(m, k) = gamma_coefficient(m, k, real, p);
    return stats;
}

double mmse_gain(int m, int k, const NetworkRealization& real, const SystemParams& p) {
    const double tp = static_cast<double>(p.tau_p);
    return std::sqrt(tp * p.rho_p()) * real.beta_cap_ue(m, k) / mmse_denominator(m, k, real, p);
}

Eigen::VectorXcd mmse_estimate_from_pilot(const Eigen::VectorXcd& g_true,
                                          const Eigen::MatrixXcd* spoof_channel,
                                          int m, int k, const NetworkRealization& real,
                                          const SystemParams& p, Rng& rng) {
    const double tp = static_cast<double>(p.tau_p);
    Eigen::VectorXcd y = std::sqrt(tp * p.rho_p()) * g_true;
    if (k == 0) {
        if (spoof_channel == nullptr)
            throw std::invalid_argument("mmse_estimate_from_pilot: spoof channel required for UE 1");
        // the monitor's spoofing pilot despreads to the all-ones combination
        y += std::sqrt(tp * p.rho_p_pm()) * spoof_channel->rowwise().sum();
    }
    y += sample_rayleigh_vector(1.0, p.n_ap, rng);  // despread pilot noise
    return mmse_gain(m, k, real, p) * y;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> sample_mmse_estimate(
    int m, int k, const NetworkRealization& real, const SystemParams& p, Rng& rng) {
    const Eigen::VectorXcd g = sample_rayleigh_vector(real.beta_cap_ue(m, k), p.n_ap, rng);
    Eigen::MatrixXcd spoof;
    const Eigen::MatrixXcd* spoof_ptr = nullptr;
    if (k == 0) {
        spoof = sample_rayleigh_matrix(real.beta_cap_pm(m), p.n_ap, p.n_pm, rng);
        spoof_ptr = &spoof;
    }
    Eigen::VectorXcd g_hat = mmse_estimate_from_pilot(g, spoof_ptr, m, k, real, p, rng);
    return {g_hat, g - g_hat};
}

}  // namespace amisac
