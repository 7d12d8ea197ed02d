// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amisac {

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

double sdp(const std::vector<EnsembleRecord>& records, double kappa_linear) {
    if (records.empty()) throw std::invalid_argument("sdp: empty ensemble");
    long hits = 0;
    for (const auto& rec : records)
        if (rec.sinr_cpu >= kappa_linear) ++hits;
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

double msp(const std::vector<EnsembleRecord>& records) {
    if (records.empty()) throw std::invalid_argument("msp: empty ensemble");
    long hits = 0;
    for (const auto& rec : records)
        if (rec.sinr_monitor >= rec.sinr_ue1) ++hits;
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: no samples");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double operational_lifetime(double e_max_joules, double p_sta_watts, double theta_sum,
                            double p_pm_watts, double eta_amp) {
    const double drain = p_sta_watts + theta_sum * p_pm_watts / eta_amp;
    if (drain <= 0.0) throw std::domain_error("operational_lifetime: nonpositive power drain");
    return e_max_joules / drain;
}

}  // namespace amisac
