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

#include "risloc/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace risloc {

namespace {
// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex &planner_mutex()
{
    static std::mutex m;
    return m;
}
} // namespace

SpectrumTransform::SpectrumTransform(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("SpectrumTransform: sizes must be >= 1");
    buf_ = static_cast<std::complex<double> *>(
        fftw_malloc(sizeof(std::complex<double>) * static_cast<std::size_t>(rows) * cols));
    if (buf_ == nullptr)
        throw std::bad_alloc();

    std::lock_guard<std::mutex> lock(planner_mutex());
    // Column-major storage: rows are the contiguous (fastest) dimension,
    // which FFTW names n1 in its row-major convention.
    plan_ = fftw_plan_dft_2d(cols, rows, reinterpret_cast<fftw_complex *>(buf_),
                             reinterpret_cast<fftw_complex *>(buf_), FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    if (plan_ == nullptr)
    {
        fftw_free(buf_);
        throw std::runtime_error("SpectrumTransform: planning failed");
    }
}

SpectrumTransform::~SpectrumTransform()
{
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    fftw_free(buf_);
}

Eigen::Map<Eigen::MatrixXcd> SpectrumTransform::buffer()
{
    return {buf_, rows_, cols_};
}

void SpectrumTransform::execute()
{
    fftw_execute(static_cast<fftw_plan>(plan_));
}

void SpectrumTransform::backward(const Eigen::MatrixXcd &in, Eigen::MatrixXcd &out)
{
    if (in.rows() != rows_ || in.cols() != cols_)
        throw std::invalid_argument("SpectrumTransform: input shape mismatch");
    buffer() = in;
    execute();
    out = buffer();
}

SpectrumTransform &SpectrumTransform::shared(int rows, int cols)
{
    thread_local std::map<std::pair<int, int>, std::unique_ptr<SpectrumTransform>> cache;
    auto &slot = cache[{rows, cols}];
    if (!slot)
        slot = std::make_unique<SpectrumTransform>(rows, cols);
    return *slot;
}

} // namespace risloc
