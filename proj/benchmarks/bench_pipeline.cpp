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

#include "risloc/dsp.hpp"
#include "risloc/experiments.hpp"
#include "risloc/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace risloc;

ScenarioConfig reference_config(int k_dft)
{
    ScenarioConfig cfg;
    cfg.pipeline.k_dft = k_dft;
    cfg.validate();
    return cfg;
}

void BM_Synthesize(benchmark::State &state)
{
    const ScenarioConfig cfg = reference_config(4793);
    std::uint64_t seed = 1;
    for (auto _ : state)
    {
        const BeatCube cube = synthesize(cfg, seed++);
        benchmark::DoNotOptimize(cube.frame(0)(0, 0));
    }
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMillisecond);

// One windowed/padded spectrum at the swept Doppler padding sizes.
void BM_DelayDopplerMap(benchmark::State &state)
{
    const int k_dft = static_cast<int>(state.range(0));
    const ScenarioConfig cfg = reference_config(k_dft);
    const BeatCube cube = synthesize(cfg, 2);
    const auto &frame = cube.frame(30);
    const WindowSpec wn{WindowKind::hann, static_cast<int>(frame.rows())};
    const WindowSpec wk{WindowKind::hann, static_cast<int>(frame.cols())};
    const DftPlan plan{cfg.pipeline.n_dft, cfg.pipeline.k_dft};

    for (auto _ : state)
    {
        const DelayDopplerMap map =
            delay_doppler_map(zero_pad(window_frame(frame, wn, wk), plan), cfg.waveform, plan);
        benchmark::DoNotOptimize(map.values(0, 0));
    }
}
BENCHMARK(BM_DelayDopplerMap)->Arg(160)->Arg(512)->Arg(4793)->Unit(benchmark::kMillisecond);

// Full sweep estimate at the Monte Carlo study size.
void BM_EstimateSweep(benchmark::State &state)
{
    const ScenarioConfig cfg = reference_config(160);
    const BeatCube cube = synthesize(cfg, 3);
    PipelineConfig pipe = cfg.pipeline_config();
    pipe.threads = static_cast<int>(state.range(0));

    for (auto _ : state)
    {
        const SweepResult result = estimate(cube, pipe);
        benchmark::DoNotOptimize(result.distance_hat_m);
    }
}
BENCHMARK(BM_EstimateSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
