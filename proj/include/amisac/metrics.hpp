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

#include <vector>

#include "amisac/sinr.hpp"

namespace amisac {

/// Per-realization outcome of an ensemble run (all SINRs linear).
struct EnsembleRecord {
    double sinr_ue1 = 0.0;
    double sinr_monitor = 0.0;
    double sinr_cpu = 0.0;
    PowerAllocation allocation;
    bool solver_feasible = true;
};

/// Success detection probability: fraction of realizations whose sensing
/// SINR is at least kappa (linear). Throws on an empty ensemble.
double sdp(const std::vector<EnsembleRecord>& records, double kappa_linear);

/// Monitoring success probability: fraction with monitor SINR >= UE 1 SINR.
double msp(const std::vector<EnsembleRecord>& records);

/// Right-continuous empirical step CDF over the given samples.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> samples);
    double operator()(double x) const;
    const std::vector<double>& support() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

/// Battery-limited service time: e_max / (p_sta + theta_sum * p_pm / eta_amp).
/// Throws std::domain_error on a nonpositive denominator.
double operational_lifetime(double e_max_joules, double p_sta_watts, double theta_sum,
                            double p_pm_watts, double eta_amp);

double to_db(double linear);
double from_db(double db);

}  // namespace amisac
