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

#include <string>
#include <vector>

#include "amisac/sinr.hpp"

namespace amisac {

/// One half-plane a*x + b*y <= c over nonnegative (x, y).
struct HalfPlane {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::string label;
};

struct FeasibilityProblem2D {
    std::vector<HalfPlane> constraints;  // x >= 0, y >= 0 are implicit
};

struct Feasible2DResult {
    bool feasible = false;
    double x = 0.0;
    double y = 0.0;
    double min_slack = 0.0;  // normalized slack of the returned witness
};

/// Exact decision by candidate-vertex enumeration over all pairwise boundary
/// intersections (axes included), with residual tolerance 1e-12 after
/// row normalization. The witness is the feasible candidate with the
/// largest minimum normalized slack.
Feasible2DResult feasible_2d(const FeasibilityProblem2D& problem);

enum class SolveStatus { optimal, infeasible };

struct OptimizationResult {
    SolveStatus status = SolveStatus::infeasible;
    PowerAllocation allocation;          // shares of rho_pm
    double sigma_s = 0.0;                // absolute normalized jamming powers
    double sigma_c = 0.0;                //   (theta * rho_pm)
    double objective = 0.0;              // achieved sensing SINR / total power
    int iterations = 0;
    std::vector<std::string> active_constraints;
};

/// Minimizes the malicious sensing SINR subject to the monitoring condition
/// and the unit share budget, by bisection on the auxiliary level t with a
/// 2-D linear feasibility check per step. Runs exactly
/// ceil(log2(1/tol_rel)) iterations.
OptimizationResult solve_p1(const QCoefficients& q, double tol_rel = 1e-6);

/// Minimizes the monitor's total normalized jamming power subject to a
/// sensing-SINR cap (linear kappa), the monitoring condition and the budget,
/// by bisection on the total power with the same feasibility machinery.
OptimizationResult solve_p2(const QCoefficients& q, double kappa_linear,
                            double rho_pm_budget, double tol_rel = 1e-6);

}  // namespace amisac
