// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "amisac/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "amisac/montecarlo.hpp"
#include "amisac/optimizer.hpp"

namespace amisac {

// ---------------------------------------------------------------- CSV

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open CSV for writing: " + path);
    out << "sweep,scheme,statistic,value,stderr\n";
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (const auto& r : rows)
        out << fmt(r.sweep) << ',' << r.scheme << ',' << r.statistic << ',' << fmt(r.value)
            << ',' << fmt(r.stderr_) << '\n';
}

std::vector<CsvRow> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "sweep,scheme,statistic,value,stderr")
        throw std::runtime_error("bad CSV header in " + path);
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[5];
        for (int i = 0; i < 5; ++i)
            if (!std::getline(ss, f[i], ',')) throw std::runtime_error("short CSV row: " + line);
        CsvRow r;
        r.sweep = std::stod(f[0]);
        r.scheme = f[1];
        r.statistic = f[2];
        r.value = std::stod(f[3]);
        r.stderr_ = std::stod(f[4]);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------- validate

namespace {

struct TermCheck {
    const char* name;
    double closed;
    double mc;
    bool gated;
};

double rel_err(double closed, double mc) {
    const double scale = std::max(std::abs(closed), std::abs(mc));
    if (scale == 0.0) return 0.0;
    return std::abs(closed - mc) / scale;
}

bool report_terms(std::ostream& os, const std::string& tag, const std::vector<TermCheck>& terms,
                  double tol) {
    bool ok = true;
    for (const auto& t : terms) {
        const double e = rel_err(t.closed, t.mc);
        const bool pass = !t.gated || e <= tol;
        ok = ok && pass;
        os << "  " << tag << ' ' << std::left << std::setw(10) << t.name << std::right
           << " closed=" << std::setw(13) << std::scientific << std::setprecision(5) << t.closed
           << " mc=" << std::setw(13) << t.mc << " rel=" << std::fixed << std::setprecision(4)
           << 100.0 * e << "%" << (t.gated ? (pass ? "  ok" : "  FAIL") : "  (ungated approx)")
           << '\n';
    }
    return ok;
}

PowerAllocation random_simplex_allocation(Rng& rng, double rho_pm) {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return {u, v, rho_pm};
}

}  // namespace

int cmd_validate(const SystemParams& params, int draws, double tol_pct, std::ostream& os) {
    const double tol_exact = tol_pct / 100.0;
    const double tol_approx = 1.5 * tol_pct / 100.0;

    const NetworkRealization real = generate_realization(params, 0);
    const EstimationStats stats = compute_estimation_stats(real, params);
    const PowerControl eta = default_ap_power_control(real, stats, params);

    std::vector<std::pair<std::string, PowerAllocation>> allocations;
    allocations.emplace_back("passive", PowerAllocation{0.0, 0.0, params.rho_pm()});
    allocations.emplace_back("epa", epa_allocation(params.rho_pm()));
    {
        Rng arng = Rng::substream(params.seed, 77);
        for (int i = 0; i < 3; ++i)
            allocations.emplace_back("random" + std::to_string(i),
                                     random_simplex_allocation(arng, params.rho_pm()));
    }

    bool all_ok = true;
    os << "closed-form vs Monte-Carlo validation, " << draws << " draws, tolerance "
       << tol_pct << "% (x1.5 for the approximated monitor receiver)\n";

    int alloc_idx = 0;
    for (const auto& [name, alloc] : allocations) {
        os << "allocation " << name << " (theta_t=" << alloc.theta_t
           << ", theta_1=" << alloc.theta_1 << ")\n";

        for (int k = 0; k < params.k_ues; ++k) {
            // common random numbers across allocations: same stream per receiver
            Rng rng = Rng::substream(params.seed, 1000 + k);
            const SinrBreakdown cf = sinr_ue(k, real, stats, alloc, eta, params);
            const SinrBreakdown mc = empirical_sinr_ue(k, real, alloc, eta, params, draws, rng);
            std::vector<TermCheck> terms = {
                {"ds", cf.ds, mc.ds, true},       {"bu", cf.bu, mc.bu, true},
                {"iu", cf.iu, mc.iu, true},       {"is", cf.is_, mc.is_, true},
                {"js_s", cf.js_s, mc.js_s, true}, {"js_c", cf.js_c, mc.js_c, true},
                {"sinr", cf.sinr(), mc.sinr(), true}};
            all_ok &= report_terms(os, "ue" + std::to_string(k + 1), terms, tol_exact);
        }

        {
            Rng rng = Rng::substream(params.seed, 2000);
            const SinrBreakdown cf = sinr_monitor(real, stats, alloc, eta, params);
            const SinrBreakdown mc =
                empirical_sinr_monitor(real, alloc, eta, params, draws, rng);
            std::vector<TermCheck> terms = {
                {"ds", cf.ds, mc.ds, true},
                {"bu", cf.bu, mc.bu, false},  // large-network Gaussian approximation
                {"iu", cf.iu, mc.iu, true},
                {"is", cf.is_, mc.is_, true},
                {"js_s", cf.js_s, mc.js_s, true},
                {"js_c", cf.js_c, mc.js_c, true},
                {"noise", cf.noise, mc.noise, true},
                {"sinr", cf.sinr(), mc.sinr(), true}};
            all_ok &= report_terms(os, "monitor", terms, tol_approx);
        }

        {
            Rng rng = Rng::substream(params.seed, 3000);
            const SinrBreakdown cf = sinr_cpu(real, stats, alloc, eta, params);
            const SinrBreakdown mc = empirical_sinr_cpu(real, alloc, eta, params, draws, rng);
            std::vector<TermCheck> terms = {{"ds", cf.ds, mc.ds, true},
                                            {"iu", cf.iu, mc.iu, true},
                                            {"js_s", cf.js_s, mc.js_s, true},
                                            {"js_c", cf.js_c, mc.js_c, true},
                                            {"noise", cf.noise, mc.noise, true},
                                            {"sinr", cf.sinr(), mc.sinr(), true}};
            all_ok &= report_terms(os, "cpu", terms, tol_exact);
        }
        ++alloc_idx;
    }

    os << (all_ok ? "VALIDATION PASS\n" : "VALIDATION FAIL\n");
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- figures

namespace {

struct Evaluated {
    EnsembleRecord passive;
    EnsembleRecord epa;
    EnsembleRecord opa;            // problem-1 solution, silent fallback if infeasible
    OptimizationResult p1;
    QCoefficients q;
};

EnsembleRecord record_at(const PowerAllocation& alloc, const NetworkRealization& real,
                         const EstimationStats& stats, const PowerControl& eta,
                         const SystemParams& p, bool feasible = true) {
    EnsembleRecord rec;
    rec.allocation = alloc;
    rec.solver_feasible = feasible;
    rec.sinr_ue1 = sinr_ue(0, real, stats, alloc, eta, p).sinr();
    rec.sinr_monitor = sinr_monitor(real, stats, alloc, eta, p).sinr();
    rec.sinr_cpu = sinr_cpu(real, stats, alloc, eta, p).sinr();
    return rec;
}

Evaluated evaluate_realization(const NetworkRealization& real, const SystemParams& p) {
    Evaluated ev;
    const EstimationStats stats = compute_estimation_stats(real, p);
    const PowerControl eta = default_ap_power_control(real, stats, p);
    ev.q = q_coefficients(real, stats, eta, p.rho_pm(), p);
    ev.passive = record_at({0.0, 0.0, p.rho_pm()}, real, stats, eta, p);
    ev.epa = record_at(epa_allocation(p.rho_pm()), real, stats, eta, p);
    ev.p1 = solve_p1(ev.q);
    if (ev.p1.status == SolveStatus::optimal) {
        ev.opa = record_at(ev.p1.allocation, real, stats, eta, p);
    } else {
        ev.opa = record_at({0.0, 0.0, p.rho_pm()}, real, stats, eta, p, false);
    }
    return ev;
}

struct MeanStd {
    double mean = 0.0;
    double stderr_ = 0.0;
};

MeanStd mean_std(const std::vector<double>& v) {
    MeanStd r;
    if (v.empty()) return r;
    for (double x : v) r.mean += x;
    r.mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - r.mean) * (x - r.mean);
    if (v.size() > 1)
        r.stderr_ = std::sqrt(ss / (static_cast<double>(v.size()) - 1.0)) /
                    std::sqrt(static_cast<double>(v.size()));
    return r;
}

void append_cdf_rows(std::vector<CsvRow>& rows, const std::vector<double>& samples_db,
                     const std::string& scheme, const std::string& stat) {
    EmpiricalCdf cdf(samples_db);
    const auto& sup = cdf.support();
    for (size_t i = 0; i < sup.size(); ++i)
        rows.push_back({sup[i], scheme, stat,
                        static_cast<double>(i + 1) / static_cast<double>(sup.size()), 0.0});
}

std::vector<int> npm_grid() { return {4, 8, 16, 32}; }
std::vector<double> ppm_grid() { return {1.0, 2.0, 3.0}; }

void fig3(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    std::vector<double> ue_p, ue_e, pm_p, pm_e, cpu_p, cpu_e;
    for (int i = 0; i < n_real; ++i) {
        const NetworkRealization real = generate_realization(base, i);
        const EstimationStats stats = compute_estimation_stats(real, base);
        const PowerControl eta = default_ap_power_control(real, stats, base);
        const EnsembleRecord pas = record_at({0, 0, base.rho_pm()}, real, stats, eta, base);
        const EnsembleRecord epa = record_at(epa_allocation(base.rho_pm()), real, stats, eta, base);
        ue_p.push_back(to_db(pas.sinr_ue1));
        ue_e.push_back(to_db(epa.sinr_ue1));
        pm_p.push_back(to_db(pas.sinr_monitor));
        pm_e.push_back(to_db(epa.sinr_monitor));
        cpu_p.push_back(to_db(pas.sinr_cpu));
        cpu_e.push_back(to_db(epa.sinr_cpu));
    }
    append_cdf_rows(rows, ue_p, "passive", "cdf_sinr_ue1_db");
    append_cdf_rows(rows, ue_e, "epa", "cdf_sinr_ue1_db");
    append_cdf_rows(rows, pm_p, "passive", "cdf_sinr_pm_db");
    append_cdf_rows(rows, pm_e, "epa", "cdf_sinr_pm_db");
    append_cdf_rows(rows, cpu_p, "passive", "cdf_sinr_cpu_db");
    append_cdf_rows(rows, cpu_e, "epa", "cdf_sinr_cpu_db");
}

void fig4(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    for (double ppm : ppm_grid()) {
        for (int npm : npm_grid()) {
            SystemParams p = base;
            p.p_pm = ppm;
            p.n_pm = npm;
            std::vector<double> epa_db, opa_db;
            for (int i = 0; i < n_real; ++i) {
                const Evaluated ev = evaluate_realization(generate_realization(p, i), p);
                epa_db.push_back(to_db(ev.epa.sinr_cpu));
                opa_db.push_back(to_db(ev.opa.sinr_cpu));
            }
            const MeanStd e = mean_std(epa_db), o = mean_std(opa_db);
            const std::string suffix = "_ppm" + std::to_string(static_cast<int>(ppm));
            rows.push_back({static_cast<double>(npm), "epa" + suffix, "mean_sinr_cpu_db",
                            e.mean, e.stderr_});
            rows.push_back({static_cast<double>(npm), "opa" + suffix, "mean_sinr_cpu_db",
                            o.mean, o.stderr_});
        }
    }
}

void sdp_over(const SystemParams& p, int n_real, double kappa_db,
              std::vector<EnsembleRecord>& epa_recs, std::vector<EnsembleRecord>& opa_recs) {
    epa_recs.clear();
    opa_recs.clear();
    for (int i = 0; i < n_real; ++i) {
        const Evaluated ev = evaluate_realization(generate_realization(p, i), p);
        epa_recs.push_back(ev.epa);
        opa_recs.push_back(ev.opa);
    }
    (void)kappa_db;
}

void fig5(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    const double kappa = from_db(8.0);
    for (double ppm : ppm_grid()) {
        for (int npm : npm_grid()) {
            SystemParams p = base;
            p.p_pm = ppm;
            p.n_pm = npm;
            std::vector<EnsembleRecord> epa_recs, opa_recs;
            sdp_over(p, n_real, 8.0, epa_recs, opa_recs);
            const double se = [&](double prob) {
                return std::sqrt(std::max(prob * (1.0 - prob), 0.0) / n_real);
            }(0.5);
            const std::string suffix = "_ppm" + std::to_string(static_cast<int>(ppm));
            rows.push_back({static_cast<double>(npm), "epa" + suffix, "sdp",
                            sdp(epa_recs, kappa), se});
            rows.push_back({static_cast<double>(npm), "opa" + suffix, "sdp",
                            sdp(opa_recs, kappa), se});
        }
    }
}

void fig6(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    const double kappa = from_db(8.0);
    for (double radius : {100.0, 300.0, 500.0}) {
        for (double h : {100.0, 300.0, 500.0, 700.0, 900.0}) {
            SystemParams p = base;
            p.target_height = h;
            p.monitor_radius = radius;
            std::vector<EnsembleRecord> epa_recs, opa_recs;
            sdp_over(p, n_real, 8.0, epa_recs, opa_recs);
            rows.push_back({h, "opa_r" + std::to_string(static_cast<int>(radius)), "sdp",
                            sdp(opa_recs, kappa), 0.0});
        }
    }
}

void fig7(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    for (double ppm : ppm_grid()) {
        for (int npm : {8, 32}) {
            SystemParams p = base;
            p.p_pm = ppm;
            p.n_pm = npm;
            std::vector<EnsembleRecord> epa_recs, opa_recs;
            sdp_over(p, n_real, 0.0, epa_recs, opa_recs);
            for (double kappa_db = 0.0; kappa_db <= 14.0; kappa_db += 2.0) {
                const std::string suffix = "_ppm" + std::to_string(static_cast<int>(ppm)) +
                                           "_npm" + std::to_string(npm);
                rows.push_back({kappa_db, "opa" + suffix, "sdp",
                                sdp(opa_recs, from_db(kappa_db)), 0.0});
                rows.push_back({kappa_db, "epa" + suffix, "sdp",
                                sdp(epa_recs, from_db(kappa_db)), 0.0});
            }
        }
    }
}

void fig9(const SystemParams& base, int n_real, std::vector<CsvRow>& rows) {
    for (double ppm : ppm_grid()) {
        for (int npm : {8, 16, 32}) {
            SystemParams p = base;
            p.p_pm = ppm;
            p.n_pm = npm;
            std::vector<double> epa_db, opa_power_w, savings_pct;
            int infeasible = 0;
            for (int i = 0; i < n_real; ++i) {
                const NetworkRealization real = generate_realization(p, i);
                const EstimationStats stats = compute_estimation_stats(real, p);
                const PowerControl eta = default_ap_power_control(real, stats, p);
                const QCoefficients q = q_coefficients(real, stats, eta, p.rho_pm(), p);
                const EnsembleRecord epa =
                    record_at(epa_allocation(p.rho_pm()), real, stats, eta, p);
                // per-realization detection cap: exactly the equal-split level
                const double kappa = epa.sinr_cpu;
                const OptimizationResult r2 = solve_p2(q, kappa, p.rho_pm());
                if (r2.status != SolveStatus::optimal) {
                    ++infeasible;
                    continue;
                }
                epa_db.push_back(to_db(epa.sinr_cpu));
                const double power_w = r2.objective * p.noise_power_w();
                opa_power_w.push_back(power_w);
                savings_pct.push_back(100.0 * (1.0 - power_w / p.p_pm));
            }
            const MeanStd e = mean_std(epa_db);
            const MeanStd pw = mean_std(opa_power_w);
            const MeanStd sv = mean_std(savings_pct);
            const std::string suffix = "_ppm" + std::to_string(static_cast<int>(ppm)) +
                                       "_npm" + std::to_string(npm);
            rows.push_back({e.mean, "epa" + suffix, "mean_total_power_w", ppm, 0.0});
            rows.push_back({e.mean, "opa" + suffix, "mean_total_power_w", pw.mean, pw.stderr_});
            rows.push_back({e.mean, "opa" + suffix, "power_saving_pct", sv.mean, sv.stderr_});
            rows.push_back({e.mean, "opa" + suffix, "infeasible_count",
                            static_cast<double>(infeasible), 0.0});
        }
    }
}

}  // namespace

void cmd_figure(const std::string& name, const SystemParams& params,
                const std::string& out_csv, int realizations, std::ostream& log) {
    std::vector<CsvRow> rows;
    if (name == "fig3")
        fig3(params, realizations, rows);
    else if (name == "fig4")
        fig4(params, realizations, rows);
    else if (name == "fig5")
        fig5(params, realizations, rows);
    else if (name == "fig6")
        fig6(params, realizations, rows);
    else if (name == "fig7" || name == "fig8")
        fig7(params, realizations, rows);
    else if (name == "fig9")
        fig9(params, realizations, rows);
    else
        throw std::invalid_argument("unknown figure name: " + name);
    write_csv(out_csv, rows);
    log << name << ": wrote " << rows.size() << " rows to " << out_csv << "\n";
}

// ---------------------------------------------------------------- optimize

namespace {

void print_breakdown(std::ostream& os, const std::string& tag, const SinrBreakdown& b) {
    os << "  " << std::left << std::setw(10) << tag << std::right << std::scientific
       << std::setprecision(4) << " ds=" << b.ds << " bu=" << b.bu << " iu=" << b.iu
       << " is=" << b.is_ << " js_s=" << b.js_s << " js_c=" << b.js_c << " noise=" << b.noise
       << std::fixed << std::setprecision(3) << "  sinr=" << to_db(b.sinr()) << " dB\n";
}

void breakdown_rows(std::vector<CsvRow>& rows, const std::string& scheme,
                    const SinrBreakdown& b, const std::string& rx) {
    auto push = [&](const char* stat, double v) {
        rows.push_back({0.0, scheme, rx + "_" + stat, v, 0.0});
    };
    push("ds", b.ds);
    push("bu", b.bu);
    push("iu", b.iu);
    push("is", b.is_);
    push("js_s", b.js_s);
    push("js_c", b.js_c);
    push("noise", b.noise);
    push("sinr_db", to_db(b.sinr()));
}

}  // namespace

void cmd_optimize(const std::string& problem, const SystemParams& params,
                  std::optional<double> kappa_db, const std::string& out_csv,
                  std::ostream& os) {
    if (problem != "p1" && problem != "p2")
        throw std::invalid_argument("unknown problem (want p1 or p2): " + problem);
    if (problem == "p2" && !kappa_db.has_value())
        throw std::invalid_argument("p2 requires --kappa-db");

    const NetworkRealization real = generate_realization(params, 0);
    const EstimationStats stats = compute_estimation_stats(real, params);
    const PowerControl eta = default_ap_power_control(real, stats, params);
    const QCoefficients q = q_coefficients(real, stats, eta, params.rho_pm(), params);

    OptimizationResult res;
    if (problem == "p1")
        res = solve_p1(q);
    else
        res = solve_p2(q, from_db(*kappa_db), params.rho_pm());

    const PowerAllocation before{0.0, 0.0, params.rho_pm()};
    const PowerAllocation after =
        res.status == SolveStatus::optimal ? res.allocation : before;

    os << "problem " << problem << ": "
       << (res.status == SolveStatus::optimal ? "optimal" : "infeasible") << ", iterations "
       << res.iterations << "\n";
    os << "  allocation theta_t=" << after.theta_t << " theta_1=" << after.theta_1;
    if (problem == "p2")
        os << "  total power " << res.objective * params.noise_power_w() << " W";
    os << "\n  active:";
    for (const auto& label : res.active_constraints) os << ' ' << label;
    os << "\n";

    std::vector<CsvRow> rows;
    for (const auto& [tag, alloc] :
         std::vector<std::pair<std::string, PowerAllocation>>{
             {"silent", before},
             {"epa", epa_allocation(params.rho_pm())},
             {"optimized", after}}) {
        const SinrBreakdown ue = sinr_ue(0, real, stats, alloc, eta, params);
        const SinrBreakdown pm = sinr_monitor(real, stats, alloc, eta, params);
        const SinrBreakdown cpu = sinr_cpu(real, stats, alloc, eta, params);
        os << tag << ":\n";
        print_breakdown(os, "ue1", ue);
        print_breakdown(os, "monitor", pm);
        print_breakdown(os, "cpu", cpu);
        breakdown_rows(rows, tag, ue, "ue1");
        breakdown_rows(rows, tag, pm, "monitor");
        breakdown_rows(rows, tag, cpu, "cpu");
    }
    rows.push_back({0.0, "solver", "status",
                    res.status == SolveStatus::optimal ? 1.0 : 0.0, 0.0});
    rows.push_back({0.0, "solver", "iterations", static_cast<double>(res.iterations), 0.0});
    rows.push_back({0.0, "solver", "theta_t", after.theta_t, 0.0});
    rows.push_back({0.0, "solver", "theta_1", after.theta_1, 0.0});
    write_csv(out_csv, rows);
}

}  // namespace amisac
