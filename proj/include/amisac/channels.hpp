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
#include <complex>

#include "amisac/rng.hpp"

namespace amisac {

using cd = std::complex<double>;

/// n i.i.d. CN(0, beta) entries.
Eigen::VectorXcd sample_rayleigh_vector(double beta, int n, Rng& rng);

/// rows x cols matrix of i.i.d. CN(0, beta) entries.
Eigen::MatrixXcd sample_rayleigh_matrix(double beta, int rows, int cols, Rng& rng);

/// ULA response at half-wavelength spacing: entry i = exp(j*pi*i*sin(az)*cos(el)).
Eigen::VectorXcd steering_vector(double azimuth, double elevation, int n);

/// sqrt(zeta) * steering; the deterministic ground-to-air channel.
Eigen::VectorXcd los_channel(double zeta, const Eigen::VectorXcd& steering);

/// Effective transmit-S-AP-to-UE row channel: direct Rayleigh link plus the
/// path reflected off the target, g^T + sqrt(alpha) * h_t_ue * h_ap_t^T.
/// Returned as a column vector whose transpose is the row channel.
Eigen::VectorXcd effective_sap_ue_channel(const Eigen::VectorXcd& direct,
                                          cd h_target_ue,
                                          const Eigen::VectorXcd& h_ap_target,
                                          double alpha);

/// Effective matrix channel direct + sqrt(alpha) * h_t_rx * h_tx_t^T, covering
/// the S-AP-to-monitor, monitor-loopback and monitor-to-S-AP links.
Eigen::MatrixXcd effective_matrix_channel(const Eigen::MatrixXcd& direct,
                                          const Eigen::VectorXcd& h_target_rx,
                                          const Eigen::VectorXcd& h_tx_target,
                                          double alpha);

/// Residual self-interference channel of the full-duplex monitor,
/// n_pm x n_pm i.i.d. CN(0, sigma_si).
Eigen::MatrixXcd sample_self_interference(double sigma_si, int n_pm, Rng& rng);

}  // namespace amisac
