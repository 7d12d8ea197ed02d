// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

// Brute-force references used only by tests: grid rasterization for the 2-D
// feasibility decision, and grid search (a coarse 2-D lattice plus refined
// 1-D scans along every constraint boundary, where a linear objective over a
// polygon attains its optimum) for both power allocation problems. These
// share no code with the solver.

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "amisac/optimizer.hpp"

namespace test_oracles {

struct GridDecision {
    bool decided = false;
    bool feasible = false;
};

// Rasterizes [0, box]^2. Declares feasible when some grid point has margin
// >= 1e-6, infeasible when the best margin is clearly below what grid
// resolution could explain, and abstains in between.
inline GridDecision grid_feasible(const amisac::FeasibilityProblem2D& prob, double box, int n) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const double x = box * i / n, y = box * j / n;
            double slack = std::numeric_limits<double>::infinity();
            for (const auto& h : prob.constraints) {
                const double scale =
                    std::max({std::abs(h.a), std::abs(h.b), std::abs(h.c), 1e-300});
                slack = std::min(slack, (h.c - h.a * x - h.b * y) / scale);
            }
            best = std::max(best, slack);
        }
    }
    GridDecision d;
    const double cell = 3.0 * box / n;  // conservative Lipschitz bound per normalized row
    if (best >= 1e-6) {
        d.decided = true;
        d.feasible = true;
    } else if (best < -cell) {
        d.decided = true;
        d.feasible = false;
    }
    return d;
}

struct GridOptimum {
    bool feasible = false;
    double objective = 0.0;
    double x = 0.0, y = 0.0;
};

namespace detail {

struct Boundary {
    double a, b, c;  // the line a x + b y = c
};

template <typename Feasible, typename Objective>
void consider(double x, double y, Feasible&& ok, Objective&& f, GridOptimum& best) {
    if (x < 0.0 || y < 0.0 || !std::isfinite(x) || !std::isfinite(y)) return;
    if (!ok(x, y)) return;
    const double v = f(x, y);
    if (!best.feasible || v < best.objective) {
        best.feasible = true;
        best.objective = v;
        best.x = x;
        best.y = y;
    }
}

template <typename Feasible, typename Objective>
void scan_2d(double x_lo, double x_hi, double y_lo, double y_hi, int n, Feasible&& ok,
             Objective&& f, int refinements, GridOptimum& best) {
    GridOptimum local;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            consider(x_lo + (x_hi - x_lo) * i / n, y_lo + (y_hi - y_lo) * j / n, ok, f, local);
    if (local.feasible && (!best.feasible || local.objective < best.objective)) best = local;
    if (!local.feasible || refinements == 0) return;
    const double dx = 2.0 * (x_hi - x_lo) / n, dy = 2.0 * (y_hi - y_lo) / n;
    scan_2d(std::max(0.0, local.x - dx), local.x + dx, std::max(0.0, local.y - dy),
            local.y + dy, n, ok, f, refinements - 1, best);
}

// Refined scan along one boundary line, clipped to [0, box]^2.
template <typename Feasible, typename Objective>
void scan_line(const Boundary& l, double box, int n, Feasible&& ok, Objective&& f,
               GridOptimum& best) {
    const bool by_x = std::abs(l.b) >= std::abs(l.a);
    if (std::abs(by_x ? l.b : l.a) < 1e-300) return;
    auto point = [&](double t) {
        if (by_x) return std::pair<double, double>{t, (l.c - l.a * t) / l.b};
        return std::pair<double, double>{(l.c - l.b * t) / l.a, t};
    };
    double lo = 0.0, hi = box;
    for (int pass = 0; pass < 4; ++pass) {
        GridOptimum local;
        double best_t = lo;
        for (int i = 0; i <= n; ++i) {
            const double t = lo + (hi - lo) * i / n;
            const auto [x, y] = point(t);
            if (x > box || y > box) continue;
            const double prev = local.feasible ? local.objective
                                               : std::numeric_limits<double>::infinity();
            consider(x, y, ok, f, local);
            if (local.feasible && local.objective < prev) best_t = t;
        }
        if (local.feasible && (!best.feasible || local.objective < best.objective)) best = local;
        if (!local.feasible) return;
        const double step = 2.0 * (hi - lo) / n;
        lo = std::max(0.0, best_t - step);
        hi = std::min(box, best_t + step);
    }
}

template <typename Feasible, typename Objective>
GridOptimum grid_minimize(const std::vector<Boundary>& boundaries, double box, int n,
                          Feasible&& ok, Objective&& f) {
    GridOptimum best;
    scan_2d(0.0, box, 0.0, box, n, ok, f, 3, best);
    for (const auto& l : boundaries) scan_line(l, box, n, ok, f, best);
    return best;
}

}  // namespace detail

inline GridOptimum grid_p1(const amisac::QCoefficients& q, int n) {
    auto ok = [&](double x, double y) {
        if (x + y > 1.0 + 1e-12) return false;
        return (q.q1 * q.q6 - q.q2 * q.q5) * x + (q.q1 * q.q7 - q.q3 * q.q5) * y +
                   (q.q1 * q.q8 - q.q4 * q.q5) >=
               -1e-12;
    };
    auto f = [&](double x, double y) { return q.sinr_cpu_at(x, y); };
    const std::vector<detail::Boundary> boundaries = {
        {1.0, 1.0, 1.0},  // share budget
        {q.q1 * q.q6 - q.q2 * q.q5, q.q1 * q.q7 - q.q3 * q.q5, -(q.q1 * q.q8 - q.q4 * q.q5)},
        {1.0, 0.0, 0.0},  // axes
        {0.0, 1.0, 0.0},
    };
    return detail::grid_minimize(boundaries, 1.0, n, ok, f);
}

inline GridOptimum grid_p2(const amisac::QCoefficients& q, double kappa, double budget, int n) {
    const double q2p = q.q2 / q.rho_pm, q3p = q.q3 / q.rho_pm;
    const double q6p = q.q6 / q.rho_pm, q7p = q.q7 / q.rho_pm;
    const double q10p = q.q10 / q.rho_pm, q11p = q.q11 / q.rho_pm;
    const double cap_rhs = q.q9 / kappa - q.q12;
    auto ok = [&](double x, double y) {
        if (x + y > budget * (1.0 + 1e-12)) return false;
        if (q10p * x + q11p * y < cap_rhs - 1e-12 * std::abs(cap_rhs)) return false;
        return (q.q1 * q6p - q2p * q.q5) * x + (q.q1 * q7p - q3p * q.q5) * y +
                   (q.q1 * q.q8 - q.q4 * q.q5) >=
               -1e-12;
    };
    auto f = [&](double x, double y) { return x + y; };
    const std::vector<detail::Boundary> boundaries = {
        {1.0, 1.0, budget},
        {q10p, q11p, cap_rhs},
        {q.q1 * q6p - q2p * q.q5, q.q1 * q7p - q3p * q.q5, -(q.q1 * q.q8 - q.q4 * q.q5)},
        {1.0, 0.0, 0.0},
        {0.0, 1.0, 0.0},
    };
    return detail::grid_minimize(boundaries, budget, n, ok, f);
}

}  // namespace test_oracles
