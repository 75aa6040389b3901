// SPDX-License-Identifier: Apache-2.0
//
// risloc — RIS-aided self-localization toolkit for FMCW radar
// Copyright (C) 2026 The risloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace risloc {

/// splitmix64 mixing step; used to derive independent sub-seeds from a
/// master seed and a stream index so parallel generation is
/// schedule-independent.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream)
{
    return mix_seed(seed ^ mix_seed(stream));
}

/*!
 * Deterministic random stream. The uniform and Gaussian draws are produced
 * from raw mt19937_64 words (not the implementation-defined standard
 * distributions), so a given seed yields the same sequence on every
 * platform and the sequence does not depend on how draws interleave with
 * other streams.
 */
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    /// Uniform on [0, 1).
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Circularly-symmetric complex Gaussian with E|x|^2 = power.
    std::complex<double> complex_gaussian(double power)
    {
        // Box-Muller in polar form: |x| = sqrt(-power ln U), phase uniform.
        const double u = uniform();
        const double r = std::sqrt(-power * std::log1p(-u));
        const double phi = 2.0 * 3.141592653589793238462643383279502884 * uniform();
        return std::polar(r, phi);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace risloc
