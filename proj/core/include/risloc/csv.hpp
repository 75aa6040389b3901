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

#include "risloc/experiments.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace risloc {
namespace csv {

/// Shortest representation that parses back to the identical double.
std::string format_double(double v);

/// RFC-4180-style writer with a header row; fields containing separators
/// or quotes are quoted. The file is written atomically.
void write_table(const std::filesystem::path &path, const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows);

} // namespace csv

/// Per-point MAE table (one row per swept value), plus optional raw
/// per-run records next to it when the study kept them.
void emit_study_csv(const StudyResult &result, const std::filesystem::path &path);
void emit_run_records_csv(const StudyResult &result, const std::filesystem::path &path);

/// Per-angle sweep table; the selected row carries the final estimates.
void emit_sweep_csv(const SweepResult &result, const SweepPlan &plan,
                    const std::filesystem::path &path);

/// Three files: <prefix>_map.csv, <prefix>_beam_profile.csv,
/// <prefix>_distance_profile.csv.
void emit_diagnostics_csv(const DiagnosticsBundle &bundle, const std::filesystem::path &prefix);

} // namespace risloc
