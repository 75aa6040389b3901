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

#include "risloc/channel.hpp"

#include <filesystem>
#include <optional>
#include <utility>

namespace risloc {

/// Inclusive frame range [first, last].
using FrameRange = std::pair<int, int>;

/*!
 * Raw capture container: interleaved int16 little-endian I/Q samples (I
 * then Q), sample index fastest, then chirp, then frame, so the file holds
 * 2*2*N*K*M bytes. A JSON sidecar carries the dimensions, waveform, the
 * per-frame sweep angles, the int16 scale factor (sample = int16 * scale)
 * and a default frame-trim range.
 */
struct CaptureMeta
{
    int samples_per_chirp = 0; // N
    int chirps_per_frame = 0;  // K
    int n_frames = 0;          // M
    Waveform waveform;
    SweepPlan plan; // one direction per stored frame
    double scale = 1.0;
    FrameRange trim{0, 0};
};

/*!
 * Writes the cube as a capture pair. With scale <= 0 the scale factor is
 * chosen so the largest |I| or |Q| maps to int16 full scale; the factor
 * used is recorded in the sidecar. Writes are atomic (temp then rename).
 */
CaptureMeta export_capture(const BeatCube &cube, const std::filesystem::path &data_path,
                           const std::filesystem::path &meta_path, double scale = 0.0);

/*!
 * Reads a capture pair back into a cube, keeping only the frames inside
 * the trim range (the sidecar's range unless overridden). Throws on a file
 * size inconsistent with the metadata or a trim outside [0, M).
 */
BeatCube ingest_capture(const std::filesystem::path &data_path,
                        const std::filesystem::path &meta_path,
                        std::optional<FrameRange> trim_override = std::nullopt);

} // namespace risloc
