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

#include <complex>
#include <cstdint>
#include <random>

namespace amisac {

/// Deterministic random stream. Gaussian variates come from an explicit
/// Box-Muller transform over mt19937_64 uniforms, so the exact sample
/// sequence is reproducible on any platform from (seed) alone, and
/// per-realization substreams are reproducible from (seed, index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Substream for realization `index`: independent of draw order across
    /// indices, so realizations can be generated concurrently.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    /// Uniform in [0, 1).
    double uniform();

    /// Standard normal via Box-Muller (caches the second variate).
    double gaussian();

    /// Circularly-symmetric complex Gaussian with E{|z|^2} = variance,
    /// i.e. two independent real normals scaled by sqrt(variance/2).
    std::complex<double> cgaussian(double variance);

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace amisac
