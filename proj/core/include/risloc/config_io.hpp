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

#include "risloc/scenario.hpp"

#include <filesystem>
#include <string>

namespace risloc {

/*!
 * Loads a JSON scenario. Absent sections and fields keep their defaults;
 * an empty object yields the reference parameter set. Unknown keys are
 * rejected with their full dotted path, and the result is validated before
 * it is returned.
 */
ScenarioConfig load_config(const std::filesystem::path &path);

/// Parses a scenario from a JSON string (the loader's core; exposed for
/// tests and tools).
ScenarioConfig parse_config(const std::string &json_text);

/// Serializes every field. load(save(config)) == config.
std::string config_to_json(const ScenarioConfig &config);

void save_config(const ScenarioConfig &config, const std::filesystem::path &path);

} // namespace risloc
