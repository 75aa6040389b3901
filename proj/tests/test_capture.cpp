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

#include <catch2/catch_amalgamated.hpp>

#include "risloc/capture.hpp"
#include "risloc/dsp.hpp"
#include "risloc/random.hpp"
#include "risloc/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace risloc;

namespace {

namespace fs = std::filesystem;

struct TempDir
{
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("risloc_capture_" + std::to_string(::getpid())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

BeatCube integer_cube(int n, int k, int m, std::uint64_t seed)
{
    BeatCube cube;
    cube.waveform.samples_per_chirp = n;
    cube.waveform.chirps_per_frame = k;
    cube.waveform.chirp_duration_s = n * cube.waveform.sample_period_s;
    RandomStream rng(seed);
    for (int mi = 0; mi < m; ++mi)
    {
        cube.plan.angles.emplace_back(0.01 * mi, 0.0);
        Eigen::MatrixXcd frame(n, k);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < n; ++r)
                frame(r, c) = {std::floor(rng.uniform(-1000, 1000)),
                               std::floor(rng.uniform(-1000, 1000))};
        cube.frames.push_back(frame);
    }
    return cube;
}

} // namespace

TEST_CASE("capture: unit-scale export round-trips bit-exactly")
{
    TempDir dir;
    const BeatCube cube = integer_cube(16, 4, 5, 101);

    const CaptureMeta meta =
        export_capture(cube, dir.path / "c.bin", dir.path / "c.json", 1.0);
    CHECK(meta.scale == 1.0);
    CHECK(fs::file_size(dir.path / "c.bin") == std::size_t(2) * 2 * 16 * 4 * 5);

    const BeatCube back = ingest_capture(dir.path / "c.bin", dir.path / "c.json");
    REQUIRE(back.n_angles() == cube.n_angles());
    for (std::size_t m = 0; m < cube.n_angles(); ++m)
        CHECK(back.frame(m) == cube.frame(m));
    for (std::size_t m = 0; m < cube.n_angles(); ++m)
        CHECK(back.plan.angles[m].azimuth ==
              Catch::Approx(cube.plan.angles[m].azimuth).margin(1e-12));
}

TEST_CASE("capture: trim keeps the requested frames and angles")
{
    TempDir dir;
    const BeatCube cube = integer_cube(8, 2, 6, 102);
    export_capture(cube, dir.path / "t.bin", dir.path / "t.json", 1.0);

    const BeatCube full = ingest_capture(dir.path / "t.bin", dir.path / "t.json",
                                         FrameRange{0, 5});
    CHECK(full.n_angles() == 6);

    const BeatCube part = ingest_capture(dir.path / "t.bin", dir.path / "t.json",
                                         FrameRange{2, 4});
    REQUIRE(part.n_angles() == 3);
    for (int i = 0; i < 3; ++i)
    {
        CHECK(part.frame(i) == cube.frame(i + 2));
        CHECK(part.plan.angles[i].azimuth ==
              Catch::Approx(cube.plan.angles[i + 2].azimuth).margin(1e-12));
    }

    CHECK_THROWS_AS(ingest_capture(dir.path / "t.bin", dir.path / "t.json", FrameRange{4, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ingest_capture(dir.path / "t.bin", dir.path / "t.json", FrameRange{0, 6}),
                    std::invalid_argument);
}

TEST_CASE("capture: size mismatch is rejected")
{
    TempDir dir;
    const BeatCube cube = integer_cube(8, 2, 3, 103);
    export_capture(cube, dir.path / "s.bin", dir.path / "s.json", 1.0);

    // Truncate the data file.
    fs::resize_file(dir.path / "s.bin", fs::file_size(dir.path / "s.bin") - 4);
    CHECK_THROWS_WITH(ingest_capture(dir.path / "s.bin", dir.path / "s.json"),
                      Catch::Matchers::ContainsSubstring("size mismatch"));
}

TEST_CASE("capture: synthesized cube estimates identically after the disk round trip")
{
    TempDir dir;

    ScenarioConfig cfg;
    cfg.waveform.samples_per_chirp = 128;
    cfg.waveform.chirps_per_frame = 16;
    cfg.waveform.chirp_duration_s = 128 * cfg.waveform.sample_period_s;
    cfg.geometry.ue_position = Position3(0.0, 9.38, 0.0); // 4 m: beat stays in band
    cfg.pipeline.n_dft = 256;
    cfg.pipeline.k_dft = 32;
    cfg.pipeline.threads = 1;
    cfg.validate();

    const BeatCube cube = synthesize(cfg, 2077);
    export_capture(cube, dir.path / "e.bin", dir.path / "e.json"); // auto scale
    const BeatCube back = ingest_capture(dir.path / "e.bin", dir.path / "e.json");

    const SweepResult direct = estimate(cube, cfg.pipeline_config());
    const SweepResult viadisk = estimate(back, cfg.pipeline_config());

    CHECK(direct.selected == viadisk.selected);
    CHECK(direct.aod.azimuth == viadisk.aod.azimuth);
    // int16 quantization perturbs the spectrum far below the peaks.
    CHECK(direct.tau_hat_s == Catch::Approx(viadisk.tau_hat_s).margin(1e-12));
    CHECK(std::abs(direct.distance_hat_m - viadisk.distance_hat_m) < 1e-3);
}
