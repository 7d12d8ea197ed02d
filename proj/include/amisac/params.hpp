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

#include <cstdint>
#include <string>

namespace amisac {

/// All scalar configuration of one scenario: node counts, transmit powers,
/// geometry and the physical constants that turn powers into normalized SNRs.
/// Loadable from a flat JSON file whose keys equal the field names below.
struct SystemParams {
    // node counts
    int m_c = 32;   ///< communication APs
    int m_st = 4;   ///< transmit sensing APs
    int m_sr = 4;   ///< receive sensing APs
    int k_ues = 5;  ///< single-antenna UEs (UE 1 is the monitored one)
    int n_ap = 4;   ///< antennas per AP
    int n_pm = 32;  ///< antennas at the full-duplex monitor (tx and rx arrays)

    // geometry (meters)
    double area_side = 2000.0;
    double target_height = 500.0;
    double monitor_radius = 300.0;

    // transmit powers (Watts)
    double p_c = 1.0;     ///< downlink data per C-AP
    double p_s = 1.0;     ///< probing signal per transmit S-AP
    double p_p = 0.2;     ///< UE pilot
    double p_p_pm = 0.2;  ///< monitor spoofing pilot
    double p_pm = 1.0;    ///< monitor jamming budget

    // radio constants
    double noise_figure = 8.0;     ///< dB
    double bandwidth = 20e6;       ///< Hz
    double carrier_freq = 1.9e9;   ///< Hz

    // propagation model
    int tau_p = 5;             ///< pilot length in symbols, >= k_ues
    double sigma_sh = 9.0;     ///< shadow fading std, dB (applied beyond d1)
    double d0 = 10.0;          ///< m, first three-slope breakpoint
    double d1 = 50.0;          ///< m, second three-slope breakpoint
    double pl_const = 140.7;   ///< dB, constant term of the three-slope model
    double sigma_rcs = 1.0;    ///< m^2, target radar cross-section
    double fsl_exponent = 2.0; ///< free-space exponent of the LoS gain
    double sigma_si = 1.0;     ///< residual self-interference variance at the monitor

    // When true, the malicious CPU cancels the known C-AP data transmissions
    // from the echo receivers (worst case for the monitor: the CPU knows the
    // symbols it coordinates). The UE-interference term of the sensing SINR
    // is then identically zero. Default keeps the interference.
    bool cpu_cancels_cap_interference = false;

    std::uint64_t seed = 1;

    // ---- derived quantities ----
    double noise_power_w() const;  ///< k_B * T0 * bandwidth * noise factor
    double wavelength() const;
    double rho_c() const { return p_c / noise_power_w(); }
    double rho_s() const { return p_s / noise_power_w(); }
    double rho_p() const { return p_p / noise_power_w(); }
    double rho_p_pm() const { return p_p_pm / noise_power_w(); }
    double rho_pm() const { return p_pm / noise_power_w(); }
    double reflection_gain() const;  ///< alpha = 4*pi*sigma_rcs / lambda^2

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

/// Parses a flat JSON config. Keys must match SystemParams field names;
/// unknown keys are an error. Missing keys keep their defaults.
SystemParams load_params(const std::string& json_text);
SystemParams load_params_file(const std::string& path);

}  // namespace amisac
