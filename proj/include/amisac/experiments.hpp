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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amisac/metrics.hpp"
#include "amisac/params.hpp"

namespace amisac {

/// One output record: a sweep point, the scheme that produced it, a named
/// statistic and its value with standard error.
struct CsvRow {
    double sweep = 0.0;
    std::string scheme;
    std::string statistic;
    double value = 0.0;
    double stderr_ = 0.0;
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows);
std::vector<CsvRow> read_csv(const std::string& path);

/// Term-by-term closed-form versus Monte-Carlo comparison on one realization
/// of the configured scenario, for the silent monitor, the equal split and
/// three random splits. Returns 0 when every gated term is within tolerance
/// (tol_pct for the exact receivers, 1.5 * tol_pct for the approximated
/// monitor SINR), 1 otherwise.
int cmd_validate(const SystemParams& params, int draws, double tol_pct, std::ostream& report);

/// Reproduces one result figure as CSV; `name` is fig3..fig9 (fig8 is the
/// same detection-threshold sweep engine as fig7). Throws on unknown names.
void cmd_figure(const std::string& name, const SystemParams& params,
                const std::string& out_csv, int realizations, std::ostream& log);

/// End-to-end single-realization run of one of the two allocation problems;
/// prints the breakdowns before and after optimization and writes them as CSV.
void cmd_optimize(const std::string& problem, const SystemParams& params,
                  std::optional<double> kappa_db, const std::string& out_csv,
                  std::ostream& report);

}  // namespace amisac
