// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace amisac {

namespace {

constexpr double kResidualTol = 1e-12;

struct Line {
    // a*x + b*y = c, the boundary of a (normalized) half-plane
    double a, b, c;
};

HalfPlane normalized(const HalfPlane& h) {
    const double scale = std::max({std::abs(h.a), std::abs(h.b), std::abs(h.c), 1e-300});
    return {h.a / scale, h.b / scale, h.c / scale, h.label};
}

}  // namespace

Feasible2DResult feasible_2d(const FeasibilityProblem2D& problem) {
    std::vector<HalfPlane> cons;
    cons.reserve(problem.constraints.size() + 2);
    for (const auto& h : problem.constraints) cons.push_back(normalized(h));
    cons.push_back({-1.0, 0.0, 0.0, "x>=0"});
    cons.push_back({0.0, -1.0, 0.0, "y>=0"});

    std::vector<Line> lines;
    lines.reserve(cons.size());
    for (const auto& h : cons) lines.push_back({h.a, h.b, h.c});

    auto min_slack = [&](double x, double y) {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& h : cons) worst = std::min(worst, h.c - h.a * x - h.b * y);
        return worst;
    };

    Feasible2DResult best;
    best.min_slack = -std::numeric_limits<double>::infinity();
    auto consider = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y)) return;
        const double slack = min_slack(x, y);
        if (slack > best.min_slack) {
            best.min_slack = slack;
            best.x = x;
            best.y = y;
        }
    };

    consider(0.0, 0.0);
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::abs(det) < 1e-14) continue;  // parallel boundaries
            const double x = (lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det;
            const double y = (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det;
            consider(x, y);
        }
    }

    best.feasible = best.min_slack >= -kResidualTol;
    if (best.feasible) {
        best.x = std::max(best.x, 0.0);
        best.y = std::max(best.y, 0.0);
    }
    return best;
}

namespace {

int bisection_steps(double tol_rel) {
    return static_cast<int>(std::ceil(std::log2(1.0 / tol_rel)));
}

// monitoring condition in share space: (q1 q6 - q2 q5) x + (q1 q7 - q3 q5) y >= q4 q5 - q1 q8
HalfPlane monitoring_constraint(const QCoefficients& q) {
    return {-(q.q1 * q.q6 - q.q2 * q.q5), -(q.q1 * q.q7 - q.q3 * q.q5),
            -(q.q4 * q.q5 - q.q1 * q.q8), "monitoring"};
}

std::vector<std::string> active_labels(const std::vector<HalfPlane>& cons, double x, double y,
                                       double tol) {
    std::vector<std::string> out;
    for (const auto& hc : cons) {
        const HalfPlane h = normalized(hc);
        if (std::abs(h.c - h.a * x - h.b * y) <= tol) out.push_back(h.label);
    }
    if (x <= tol) out.push_back("x>=0");
    if (y <= tol) out.push_back("y>=0");
    return out;
}

}  // namespace

OptimizationResult solve_p1(const QCoefficients& q, double tol_rel) {
    OptimizationResult res;
    const HalfPlane mon = monitoring_constraint(q);
    const HalfPlane budget{1.0, 1.0, 1.0, "budget"};

    // the monitoring condition must admit some point of the share simplex
    FeasibilityProblem2D base;
    base.constraints = {budget, mon};
    Feasible2DResult witness = feasible_2d(base);
    if (!witness.feasible) {
        res.status = SolveStatus::infeasible;
        res.iterations = 0;
        return res;
    }

    // bisect the normalized denominator level; any share point already
    // reaches the zero-jamming level, so the bracket below is valid
    double t_lo = q.q12 / q.q9;
    double t_hi = (std::max(q.q10, q.q11) + q.q12) / q.q9;
    const double range = t_hi - t_lo;
    res.iterations = range > 0.0 ? bisection_steps(tol_rel) : 0;

    for (int it = 0; it < res.iterations; ++it) {
        const double t = 0.5 * (t_lo + t_hi);
        FeasibilityProblem2D step;
        step.constraints = {budget, mon,
                            {-q.q10, -q.q11, q.q12 - t * q.q9, "sinr-level"}};
        const Feasible2DResult f = feasible_2d(step);
        if (f.feasible) {
            t_lo = t;
            witness = f;
        } else {
            t_hi = t;
        }
    }

    res.status = SolveStatus::optimal;
    res.allocation = {witness.x, witness.y, q.rho_pm};
    res.sigma_s = witness.x * q.rho_pm;
    res.sigma_c = witness.y * q.rho_pm;
    res.objective = q.sinr_cpu_at(witness.x, witness.y);
    res.active_constraints =
        active_labels({budget, mon}, witness.x, witness.y, 10.0 * tol_rel * std::max(range, 1.0));
    return res;
}

OptimizationResult solve_p2(const QCoefficients& q, double kappa_linear, double rho_pm_budget,
                            double tol_rel) {
    OptimizationResult res;
    // absolute-power coefficients: divide the budget-scaled constants out
    const double q2p = q.q2 / q.rho_pm, q3p = q.q3 / q.rho_pm;
    const double q6p = q.q6 / q.rho_pm, q7p = q.q7 / q.rho_pm;
    const double q10p = q.q10 / q.rho_pm, q11p = q.q11 / q.rho_pm;

    // sensing cap: q10' s + q11' c >= q9/kappa - q12
    const HalfPlane cap{-q10p, -q11p, -(q.q9 / kappa_linear - q.q12), "sensing-cap"};
    const HalfPlane mon{-(q.q1 * q6p - q2p * q.q5), -(q.q1 * q7p - q3p * q.q5),
                        -(q.q4 * q.q5 - q.q1 * q.q8), "monitoring"};

    auto feasible_at = [&](double power_budget) {
        FeasibilityProblem2D prob;
        prob.constraints = {cap, mon, {1.0, 1.0, power_budget, "power"}};
        return feasible_2d(prob);
    };

    // the silent monitor is the optimum whenever it already satisfies both
    if (q.q12 * kappa_linear >= q.q9 && q.q1 * q.q8 >= q.q4 * q.q5) {
        res.status = SolveStatus::optimal;
        res.allocation = {0.0, 0.0, q.rho_pm};
        res.objective = 0.0;
        res.iterations = 0;
        res.active_constraints = {"x>=0", "y>=0"};
        return res;
    }

    Feasible2DResult witness = feasible_at(rho_pm_budget);
    if (!witness.feasible) {
        res.status = SolveStatus::infeasible;
        res.iterations = 0;
        return res;
    }

    double lo = 0.0, hi = rho_pm_budget;
    res.iterations = bisection_steps(tol_rel);
    for (int it = 0; it < res.iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Feasible2DResult f = feasible_at(mid);
        if (f.feasible) {
            hi = mid;
            witness = f;
        } else {
            lo = mid;
        }
    }

    res.status = SolveStatus::optimal;
    res.sigma_s = witness.x;
    res.sigma_c = witness.y;
    res.allocation = {witness.x / q.rho_pm, witness.y / q.rho_pm, q.rho_pm};
    res.objective = witness.x + witness.y;
    res.active_constraints = active_labels({cap, mon}, witness.x, witness.y,
                                           10.0 * tol_rel * std::max(rho_pm_budget, 1.0));
    return res;
}

}  // namespace amisac
