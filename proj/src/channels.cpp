// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace amisac {

Eigen::VectorXcd sample_rayleigh_vector(double beta, int n, Rng& rng) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.cgaussian(beta);
    return v;
}

Eigen::MatrixXcd sample_rayleigh_matrix(double beta, int rows, int cols, Rng& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rng.cgaussian(beta);
    return m;
}

Eigen::VectorXcd steering_vector(double azimuth, double elevation, int n) {
    Eigen::VectorXcd a(n);
    const double phase_step = M_PI * std::sin(azimuth) * std::cos(elevation);
    for (int i = 0; i < n; ++i) a(i) = std::polar(1.0, phase_step * i);
    return a;
}

Eigen::VectorXcd los_channel(double zeta, const Eigen::VectorXcd& steering) {
    return std::sqrt(zeta) * steering;
}

Eigen::VectorXcd effective_sap_ue_channel(const Eigen::VectorXcd& direct, cd h_target_ue,
                                          const Eigen::VectorXcd& h_ap_target, double alpha) {
    if (direct.size() != h_ap_target.size())
        throw std::invalid_argument("effective_sap_ue_channel: dimension mismatch");
    return direct + std::sqrt(alpha) * h_target_ue * h_ap_target;
}

Eigen::MatrixXcd effective_matrix_channel(const Eigen::MatrixXcd& direct,
                                          const Eigen::VectorXcd& h_target_rx,
                                          const Eigen::VectorXcd& h_tx_target, double alpha) {
    if (direct.rows() != h_target_rx.size() || direct.cols() != h_tx_target.size())
        throw std::invalid_argument("effective_matrix_channel: dimension mismatch");
    return direct + std::sqrt(alpha) * h_target_rx * h_tx_target.transpose();
}

Eigen::MatrixXcd sample_self_interference(double sigma_si, int n_pm, Rng& rng) {
    return sample_rayleigh_matrix(sigma_si, n_pm, n_pm, rng);
}

}  // namespace amisac
