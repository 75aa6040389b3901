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

#include <Eigen/Dense>
#include <memory>

namespace risloc {

/*!
 * Unnormalized 2D inverse DFT (positive-sign exponents in both dimensions)
 * of a rows x cols complex matrix, for arbitrary sizes including primes.
 *
 * Instances own an aligned in-place buffer and a cached plan; they are not
 * thread-safe, but distinct instances may run concurrently. Plan
 * construction is internally serialized.
 */
class SpectrumTransform
{
  public:
    SpectrumTransform(int rows, int cols);
    ~SpectrumTransform();

    SpectrumTransform(const SpectrumTransform &) = delete;
    SpectrumTransform &operator=(const SpectrumTransform &) = delete;

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// In-place transform buffer, exposed as a rows x cols matrix view.
    Eigen::Map<Eigen::MatrixXcd> buffer();

    /// Transforms the buffer contents in place.
    void execute();

    /// Convenience: out = IDFT2(in), unnormalized.
    void backward(const Eigen::MatrixXcd &in, Eigen::MatrixXcd &out);

    /// Per-thread instance for the given size, created on first use.
    static SpectrumTransform &shared(int rows, int cols);

  private:
    int rows_;
    int cols_;
    std::complex<double> *buf_;
    void *plan_;
};

} // namespace risloc
