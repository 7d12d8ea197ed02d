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

#include "amisac/rng.hpp"
#include "amisac/sinr.hpp"

namespace amisac {

// Empirical oracle for the closed forms: every expectation of the receive
// decompositions is estimated by averaging instantaneous per-symbol
// coefficients over small-scale fading draws. The desired-signal power is
// |sample mean|^2 and the beamforming uncertainty is the sample variance
// around it; each interference power is a plain mean of |coefficient|^2.
// Estimates are accumulated with pairwise summation, so a given (rng state,
// n_draws) yields bit-identical results regardless of later parallelism.

SinrBreakdown empirical_sinr_ue(int k, const NetworkRealization& real,
                                const PowerAllocation& alloc, const PowerControl& eta,
                                const SystemParams& params, int n_draws, Rng& rng);

SinrBreakdown empirical_sinr_monitor(const NetworkRealization& real,
                                     const PowerAllocation& alloc, const PowerControl& eta,
                                     const SystemParams& params, int n_draws, Rng& rng);

SinrBreakdown empirical_sinr_cpu(const NetworkRealization& real,
                                 const PowerAllocation& alloc, const PowerControl& eta,
                                 const SystemParams& params, int n_draws, Rng& rng);

}  // namespace amisac
