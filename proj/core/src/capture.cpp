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

#include "risloc/capture.hpp"

#include "io_detail.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace risloc {

using nlohmann::json;

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr int kFullScale = 32767;

std::int16_t quantize(double v, double scale)
{
    const double q = std::round(v / scale);
    return static_cast<std::int16_t>(std::clamp(q, -32768.0, 32767.0));
}

json meta_to_json(const CaptureMeta &meta)
{
    json angles = json::array();
    for (const auto &dir : meta.plan.angles)
        angles.push_back({dir.azimuth * kRadToDeg, dir.elevation * kRadToDeg});

    return json{{"samples_per_chirp", meta.samples_per_chirp},
                {"chirps_per_frame", meta.chirps_per_frame},
                {"n_frames", meta.n_frames},
                {"scale", meta.scale},
                {"trim", {meta.trim.first, meta.trim.second}},
                {"angles_deg", angles},
                {"waveform",
                 {{"carrier_freq_hz", meta.waveform.carrier_freq_hz},
                  {"wavelength_m", meta.waveform.wavelength_m},
                  {"bandwidth_hz", meta.waveform.bandwidth_hz},
                  {"chirp_duration_s", meta.waveform.chirp_duration_s},
                  {"sample_period_s", meta.waveform.sample_period_s},
                  {"samples_per_chirp", meta.waveform.samples_per_chirp},
                  {"chirps_per_frame", meta.waveform.chirps_per_frame}}}};
}

CaptureMeta meta_from_json(const json &root)
{
    CaptureMeta meta;
    try
    {
        root.at("samples_per_chirp").get_to(meta.samples_per_chirp);
        root.at("chirps_per_frame").get_to(meta.chirps_per_frame);
        root.at("n_frames").get_to(meta.n_frames);
        if (root.contains("scale"))
            root.at("scale").get_to(meta.scale);
        if (root.contains("trim"))
        {
            meta.trim.first = root.at("trim").at(0).get<int>();
            meta.trim.second = root.at("trim").at(1).get<int>();
        }
        else
        {
            meta.trim = {0, meta.n_frames - 1};
        }

        const auto &wf = root.at("waveform");
        wf.at("carrier_freq_hz").get_to(meta.waveform.carrier_freq_hz);
        wf.at("wavelength_m").get_to(meta.waveform.wavelength_m);
        wf.at("bandwidth_hz").get_to(meta.waveform.bandwidth_hz);
        wf.at("chirp_duration_s").get_to(meta.waveform.chirp_duration_s);
        wf.at("sample_period_s").get_to(meta.waveform.sample_period_s);
        wf.at("samples_per_chirp").get_to(meta.waveform.samples_per_chirp);
        wf.at("chirps_per_frame").get_to(meta.waveform.chirps_per_frame);

        const auto &angles = root.at("angles_deg");
        for (const auto &pair : angles)
            meta.plan.angles.emplace_back(pair.at(0).get<double>() * kDegToRad,
                                          pair.at(1).get<double>() * kDegToRad);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("capture metadata: ") + e.what());
    }
    return meta;
}

void validate_meta(const CaptureMeta &meta)
{
    if (meta.samples_per_chirp != meta.waveform.samples_per_chirp ||
        meta.chirps_per_frame != meta.waveform.chirps_per_frame)
        throw std::invalid_argument("capture metadata: dims disagree with the waveform");
    if (meta.n_frames < 1)
        throw std::invalid_argument("capture metadata: n_frames must be >= 1");
    if (static_cast<int>(meta.plan.size()) != meta.n_frames)
        throw std::invalid_argument("capture metadata: angle list length != n_frames");
    if (!(meta.scale > 0.0) || !std::isfinite(meta.scale))
        throw std::invalid_argument("capture metadata: scale must be positive");
    if (meta.trim.first < 0 || meta.trim.second >= meta.n_frames ||
        meta.trim.first > meta.trim.second)
        throw std::invalid_argument("capture metadata: trim range out of bounds");
}

} // namespace

CaptureMeta export_capture(const BeatCube &cube, const std::filesystem::path &data_path,
                           const std::filesystem::path &meta_path, double scale)
{
    cube.validate();
    const int n = cube.waveform.samples_per_chirp;
    const int k = cube.waveform.chirps_per_frame;
    const int m = static_cast<int>(cube.n_angles());

    if (scale <= 0.0)
    {
        double max_abs = 0.0;
        for (const auto &frame : cube.frames)
        {
            max_abs = std::max(max_abs, frame.real().cwiseAbs().maxCoeff());
            max_abs = std::max(max_abs, frame.imag().cwiseAbs().maxCoeff());
        }
        scale = max_abs > 0.0 ? max_abs / kFullScale : 1.0;
    }

    // n fastest, then k, then m; I before Q.
    std::string payload;
    payload.resize(static_cast<std::size_t>(4) * n * k * m);
    auto *words = reinterpret_cast<std::int16_t *>(payload.data());
    std::size_t w = 0;
    for (int mi = 0; mi < m; ++mi)
    {
        const auto &frame = cube.frame(static_cast<std::size_t>(mi));
        for (int ki = 0; ki < k; ++ki)
            for (int ni = 0; ni < n; ++ni)
            {
                const std::complex<double> s = frame(ni, ki);
                words[w++] = quantize(s.real(), scale);
                words[w++] = quantize(s.imag(), scale);
            }
    }

    CaptureMeta meta;
    meta.samples_per_chirp = n;
    meta.chirps_per_frame = k;
    meta.n_frames = m;
    meta.waveform = cube.waveform;
    meta.plan = cube.plan;
    meta.scale = scale;
    meta.trim = {0, m - 1};

    io_detail::write_file_atomic(data_path, payload);
    io_detail::write_file_atomic(meta_path, meta_to_json(meta).dump(2) + "\n");
    return meta;
}

BeatCube ingest_capture(const std::filesystem::path &data_path,
                        const std::filesystem::path &meta_path,
                        std::optional<FrameRange> trim_override)
{
    std::ifstream meta_in(meta_path);
    if (!meta_in)
        throw std::runtime_error("cannot open capture metadata: " + meta_path.string());
    json root;
    try
    {
        meta_in >> root;
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("capture metadata parse error: ") + e.what());
    }
    CaptureMeta meta = meta_from_json(root);
    if (trim_override)
        meta.trim = *trim_override;
    validate_meta(meta);

    const std::size_t expected_bytes = static_cast<std::size_t>(4) * meta.samples_per_chirp *
                                       meta.chirps_per_frame * meta.n_frames;
    std::ifstream data_in(data_path, std::ios::binary);
    if (!data_in)
        throw std::runtime_error("cannot open capture data: " + data_path.string());
    data_in.seekg(0, std::ios::end);
    const auto file_size = static_cast<std::size_t>(data_in.tellg());
    if (file_size != expected_bytes)
        throw std::invalid_argument("capture data size mismatch: expected " +
                                    std::to_string(expected_bytes) + " bytes, found " +
                                    std::to_string(file_size));
    data_in.seekg(0, std::ios::beg);

    const int n = meta.samples_per_chirp;
    const int k = meta.chirps_per_frame;
    const auto [first, last] = meta.trim;

    BeatCube cube;
    cube.waveform = meta.waveform;
    cube.plan.angles.assign(meta.plan.angles.begin() + first,
                            meta.plan.angles.begin() + last + 1);
    cube.frames.resize(static_cast<std::size_t>(last - first + 1));

    const std::size_t frame_bytes = static_cast<std::size_t>(4) * n * k;
    std::vector<std::int16_t> raw(static_cast<std::size_t>(2) * n * k);
    data_in.seekg(static_cast<std::streamoff>(frame_bytes) * first, std::ios::beg);
    for (int mi = first; mi <= last; ++mi)
    {
        data_in.read(reinterpret_cast<char *>(raw.data()),
                     static_cast<std::streamsize>(frame_bytes));
        if (!data_in)
            throw std::runtime_error("capture data read failed");
        Eigen::MatrixXcd &frame = cube.frames[static_cast<std::size_t>(mi - first)];
        frame.resize(n, k);
        std::size_t w = 0;
        for (int ki = 0; ki < k; ++ki)
            for (int ni = 0; ni < n; ++ni)
            {
                const double re = raw[w++] * meta.scale;
                const double im = raw[w++] * meta.scale;
                frame(ni, ki) = {re, im};
            }
    }
    return cube;
}

} // namespace risloc
