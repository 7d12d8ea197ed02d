// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/params.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace amisac {

namespace {
constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr double kNoiseTempK = 290.0;
constexpr double kSpeedOfLight = 299792458.0;  // m/s
}  // namespace

double SystemParams::noise_power_w() const {
    return kBoltzmann * kNoiseTempK * bandwidth * std::pow(10.0, noise_figure / 10.0);
}

double SystemParams::wavelength() const { return kSpeedOfLight / carrier_freq; }

double SystemParams::reflection_gain() const {
    const double lambda = wavelength();
    return 4.0 * M_PI * sigma_rcs / (lambda * lambda);
}

void SystemParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid SystemParams: ") + what);
    };
    require(m_c >= 1 && m_st >= 1 && m_sr >= 1 && k_ues >= 1, "all node counts must be >= 1");
    require(n_ap >= 1 && n_pm >= 1, "antenna counts must be >= 1");
    require(area_side > 0 && target_height > 0 && monitor_radius >= 0, "geometry must be positive");
    require(p_c > 0 && p_s > 0 && p_p > 0 && p_p_pm >= 0 && p_pm >= 0, "powers must be positive");
    require(bandwidth > 0 && carrier_freq > 0, "bandwidth and carrier must be positive");
    require(tau_p >= k_ues, "tau_p must be at least k_ues (orthogonal pilots)");
    require(d0 > 0 && d1 > d0, "breakpoints must satisfy 0 < d0 < d1");
    require(sigma_sh >= 0 && sigma_rcs > 0 && sigma_si >= 0, "fading parameters out of range");
    require(fsl_exponent > 0, "fsl_exponent must be positive");
    require(std::isfinite(rho_c()) && rho_c() > 0 && std::isfinite(rho_pm()),
            "normalized SNRs must be finite and positive");
}

SystemParams load_params(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw std::invalid_argument("config must be a flat JSON object");

    SystemParams p;
    std::map<std::string, std::function<void(const nlohmann::json&)>> setters = {
        {"m_c", [&](const auto& v) { p.m_c = v.template get<int>(); }},
        {"m_st", [&](const auto& v) { p.m_st = v.template get<int>(); }},
        {"m_sr", [&](const auto& v) { p.m_sr = v.template get<int>(); }},
        {"k_ues", [&](const auto& v) { p.k_ues = v.template get<int>(); }},
        {"n_ap", [&](const auto& v) { p.n_ap = v.template get<int>(); }},
        {"n_pm", [&](const auto& v) { p.n_pm = v.template get<int>(); }},
        {"area_side", [&](const auto& v) { p.area_side = v.template get<double>(); }},
        {"target_height", [&](const auto& v) { p.target_height = v.template get<double>(); }},
        {"monitor_radius", [&](const auto& v) { p.monitor_radius = v.template get<double>(); }},
        {"p_c", [&](const auto& v) { p.p_c = v.template get<double>(); }},
        {"p_s", [&](const auto& v) { p.p_s = v.template get<double>(); }},
        {"p_p", [&](const auto& v) { p.p_p = v.template get<double>(); }},
        {"p_p_pm", [&](const auto& v) { p.p_p_pm = v.template get<double>(); }},
        {"p_pm", [&](const auto& v) { p.p_pm = v.template get<double>(); }},
        {"noise_figure", [&](const auto& v) { p.noise_figure = v.template get<double>(); }},
        {"bandwidth", [&](const auto& v) { p.bandwidth = v.template get<double>(); }},
        {"carrier_freq", [&](const auto& v) { p.carrier_freq = v.template get<double>(); }},
        {"tau_p", [&](const auto& v) { p.tau_p = v.template get<int>(); }},
        {"sigma_sh", [&](const auto& v) { p.sigma_sh = v.template get<double>(); }},
        {"d0", [&](const auto& v) { p.d0 = v.template get<double>(); }},
        {"d1", [&](const auto& v) { p.d1 = v.template get<double>(); }},
        {"pl_const", [&](const auto& v) { p.pl_const = v.template get<double>(); }},
        {"sigma_rcs", [&](const auto& v) { p.sigma_rcs = v.template get<double>(); }},
        {"fsl_exponent", [&](const auto& v) { p.fsl_exponent = v.template get<double>(); }},
        {"sigma_si", [&](const auto& v) { p.sigma_si = v.template get<double>(); }},
        {"cpu_cancels_cap_interference",
         [&](const auto& v) { p.cpu_cancels_cap_interference = v.template get<bool>(); }},
        {"seed", [&](const auto& v) { p.seed = v.template get<std::uint64_t>(); }},
    };

    bool tau_p_given = false;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto setter = setters.find(it.key());
        if (setter == setters.end())
            throw std::invalid_argument("unknown config key: " + it.key());
        setter->second(it.value());
        if (it.key() == "tau_p") tau_p_given = true;
    }
    if (!tau_p_given) p.tau_p = p.k_ues;  // minimum orthogonal pilot set

    p.validate();
    return p;
}

SystemParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_params(ss.str());
}

}  // namespace amisac
