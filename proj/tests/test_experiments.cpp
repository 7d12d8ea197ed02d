// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "amisac/experiments.hpp"
#include "amisac/montecarlo.hpp"

using namespace amisac;

namespace {

SystemParams tiny_params() {
    SystemParams p;
    p.m_c = 6;
    p.m_st = 2;
    p.m_sr = 2;
    p.k_ues = 2;
    p.n_ap = 2;
    p.n_pm = 8;
    p.tau_p = 2;
    p.pl_const = 35.7;
    p.bandwidth = 2e6;
    p.sigma_rcs = 5.0;
    p.sigma_si = 1e-13;
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config parsing rejects unknown keys and honors defaults") {
    CHECK_THROWS_AS(load_params("{\"m_c\": 8, \"mc_typo\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(load_params("{\"tau_p\": 1, \"k_ues\": 4}"), std::invalid_argument);
    const SystemParams p = load_params("{\"m_c\": 12, \"k_ues\": 4}");
    CHECK(p.m_c == 12);
    CHECK(p.tau_p == 4);  // defaults to the UE count
    CHECK(p.noise_figure == 8.0);
}

TEST_CASE("CSV rows survive a write/read round trip exactly") {
    const std::string path = "/tmp/amisac_roundtrip.csv";
    std::vector<CsvRow> rows = {{1.0 / 3.0, "epa", "sdp", 0.1234567890123456789, 1e-300},
                                {-2.5, "opa_x", "mean", -7.25, 0.0}};
    write_csv(path, rows);
    const auto back = read_csv(path);
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].sweep == rows[i].sweep);
        CHECK(back[i].scheme == rows[i].scheme);
        CHECK(back[i].statistic == rows[i].statistic);
        CHECK(back[i].value == rows[i].value);
        CHECK(back[i].stderr_ == rows[i].stderr_);
    }
}

TEST_CASE("figure runs are byte-identical across reruns") {
    const SystemParams p = tiny_params();
    std::ostringstream log;
    cmd_figure("fig4", p, "/tmp/amisac_fig4_a.csv", 3, log);
    cmd_figure("fig4", p, "/tmp/amisac_fig4_b.csv", 3, log);
    CHECK(read_file("/tmp/amisac_fig4_a.csv") == read_file("/tmp/amisac_fig4_b.csv"));
    CHECK(read_file("/tmp/amisac_fig4_a.csv").size() > 0);

    CHECK_THROWS_AS(cmd_figure("fig99", p, "/tmp/x.csv", 1, log), std::invalid_argument);
}

TEST_CASE("fig3 emits three CDF families per scheme") {
    const SystemParams p = tiny_params();
    std::ostringstream log;
    cmd_figure("fig3", p, "/tmp/amisac_fig3.csv", 5, log);
    const auto rows = read_csv("/tmp/amisac_fig3.csv");
    int families = 0;
    for (const auto& stat :
         {"cdf_sinr_ue1_db", "cdf_sinr_pm_db", "cdf_sinr_cpu_db"}) {
        for (const auto& scheme : {"passive", "epa"}) {
            bool seen = false;
            double last_level = 0.0;
            for (const auto& r : rows)
                if (r.statistic == stat && r.scheme == scheme) {
                    seen = true;
                    CHECK(r.value >= last_level);  // CDF levels are nondecreasing
                    last_level = r.value;
                }
            CHECK(seen);
            CHECK(last_level == doctest::Approx(1.0));
            ++families;
        }
    }
    CHECK(families == 6);
}

TEST_CASE("optimize command reports a monitoring-feasible allocation") {
    const SystemParams p = tiny_params();
    std::ostringstream report;
    cmd_optimize("p1", p, std::nullopt, "/tmp/amisac_opt.csv", report);
    const auto rows = read_csv("/tmp/amisac_opt.csv");

    double status = -1.0, ue1_opt = 0.0, pm_opt = 0.0, cpu_opt = 0.0, cpu_silent = 0.0;
    for (const auto& r : rows) {
        if (r.scheme == "solver" && r.statistic == "status") status = r.value;
        if (r.scheme == "optimized" && r.statistic == "ue1_sinr_db") ue1_opt = r.value;
        if (r.scheme == "optimized" && r.statistic == "monitor_sinr_db") pm_opt = r.value;
        if (r.scheme == "optimized" && r.statistic == "cpu_sinr_db") cpu_opt = r.value;
        if (r.scheme == "silent" && r.statistic == "cpu_sinr_db") cpu_silent = r.value;
    }
    REQUIRE(status == 1.0);
    CHECK(pm_opt >= ue1_opt - 1e-6);   // the monitoring condition held after solving
    CHECK(cpu_opt <= cpu_silent + 1e-9);

    CHECK_THROWS_AS(cmd_optimize("p2", p, std::nullopt, "/tmp/x.csv", report),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmd_optimize("p9", p, std::nullopt, "/tmp/x.csv", report),
                    std::invalid_argument);
}

TEST_CASE("an impossible tolerance fails validation") {
    const SystemParams p = tiny_params();
    std::ostringstream report;
    CHECK(cmd_validate(p, 400, 0.0, report) == 1);
}

TEST_CASE("a corrupted closed-form term would be caught by the comparison") {
    const SystemParams p = tiny_params();
    const NetworkRealization real = generate_realization(p, 0);
    const EstimationStats stats = compute_estimation_stats(real, p);
    const PowerControl eta = default_ap_power_control(real, stats, p);
    const PowerAllocation a = epa_allocation(p.rho_pm());
    Rng rng(3);
    SinrBreakdown cf = sinr_ue(0, real, stats, a, eta, p);
    const SinrBreakdown mc = empirical_sinr_ue(0, real, a, eta, p, 4000, rng);
    cf.iu = -cf.iu;  // simulated sign defect
    const double rel = std::abs(cf.iu - mc.iu) / std::max(std::abs(cf.iu), std::abs(mc.iu));
    CHECK(rel > 0.02);
}
