// SPDX-License-Identifier: Apache-2.0
//
// amisac — anti-malicious cell-free massive MIMO ISAC simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "amisac/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"anti-malicious cell-free massive MIMO ISAC simulator"};
    app.require_subcommand(1);

    // validate
    std::string v_config;
    int v_draws = 20000;
    double v_tol = 2.0;
    auto* validate = app.add_subcommand("validate", "closed form vs Monte-Carlo comparison");
    validate->add_option("--config", v_config, "JSON config path")->required();
    validate->add_option("--draws", v_draws, "fading draws per estimate");
    validate->add_option("--tol", v_tol, "tolerance in percent for exact terms");

    // figure
    std::string f_name, f_config, f_out;
    int f_real = 200;
    std::optional<std::uint64_t> f_seed;
    auto* figure = app.add_subcommand("figure", "reproduce a result figure as CSV");
    figure->add_option("name", f_name, "fig3|fig4|fig5|fig6|fig7|fig8|fig9")->required();
    figure->add_option("--config", f_config, "JSON config path")->required();
    figure->add_option("--out", f_out, "output CSV path")->required();
    figure->add_option("--realizations", f_real, "network realizations per point");
    figure->add_option("--seed", f_seed, "override the config RNG seed");

    // optimize
    std::string o_problem, o_config, o_out = "optimize.csv";
    std::optional<double> o_kappa_db;
    auto* optimize = app.add_subcommand("optimize", "solve one allocation problem end to end");
    optimize->add_option("problem", o_problem, "p1|p2")->required();
    optimize->add_option("--config", o_config, "JSON config path")->required();
    optimize->add_option("--kappa-db", o_kappa_db, "sensing SINR cap for p2, dB");
    optimize->add_option("--out", o_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            const amisac::SystemParams p = amisac::load_params_file(v_config);
            return amisac::cmd_validate(p, v_draws, v_tol, std::cout);
        }
        if (*figure) {
            amisac::SystemParams p = amisac::load_params_file(f_config);
            if (f_seed) p.seed = *f_seed;
            amisac::cmd_figure(f_name, p, f_out, f_real, std::cout);
            return 0;
        }
        if (*optimize) {
            const amisac::SystemParams p = amisac::load_params_file(o_config);
            amisac::cmd_optimize(o_problem, p, o_kappa_db, o_out, std::cout);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
