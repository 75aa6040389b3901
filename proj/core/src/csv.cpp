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

#include "risloc/csv.hpp"

#include "io_detail.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>

namespace risloc {
namespace csv {

std::string format_double(double v)
{
    char buf[40];
    // Shortest decimal form that round-trips to the same double.
    for (int prec = 15; prec <= 17; ++prec)
    {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

namespace {

std::string escape(const std::string &field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field)
    {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_row(std::string &out, const std::vector<std::string> &row)
{
    for (std::size_t i = 0; i < row.size(); ++i)
    {
        if (i)
            out += ',';
        out += escape(row[i]);
    }
    out += '\n';
}

} // namespace

void write_table(const std::filesystem::path &path, const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows)
{
    std::string out;
    append_row(out, header);
    for (const auto &row : rows)
        append_row(out, row);
    io_detail::write_file_atomic(path, out);
}

} // namespace csv

namespace {
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string fmt(double v) { return csv::format_double(v); }
} // namespace

void emit_study_csv(const StudyResult &result, const std::filesystem::path &path)
{
    const std::vector<std::string> header = {
        "parameter",      "value",         "n_az",          "n_el",
        "runs",           "status",        "mae_distance_m", "se_distance_m",
        "mae_angle_rad",  "se_angle_rad",  "mae_position_m", "se_position_m"};

    std::vector<std::vector<std::string>> rows;
    for (const auto &p : result.points)
    {
        rows.push_back({to_string(result.parameter), fmt(p.point.value),
                        std::to_string(p.point.n_az), std::to_string(p.point.n_el),
                        std::to_string(p.completed_runs), p.failure.empty() ? "ok" : p.failure,
                        fmt(p.distance.mae), fmt(p.distance.std_error), fmt(p.angle.mae),
                        fmt(p.angle.std_error), fmt(p.position.mae), fmt(p.position.std_error)});
    }
    csv::write_table(path, header, rows);
}

void emit_run_records_csv(const StudyResult &result, const std::filesystem::path &path)
{
    const std::vector<std::string> header = {"point_index",     "run",
                                             "seed",            "true_azimuth_deg",
                                             "distance_error_m", "angle_error_rad",
                                             "position_error_m"};
    std::vector<std::vector<std::string>> rows;
    for (const auto &rec : result.records)
    {
        rows.push_back({std::to_string(rec.point_index), std::to_string(rec.run),
                        std::to_string(rec.seed), fmt(rec.true_azimuth_rad * kRadToDeg),
                        fmt(rec.errors.distance_error_m), fmt(rec.errors.angle_error_rad),
                        fmt(rec.errors.position_error_m)});
    }
    csv::write_table(path, header, rows);
}

void emit_sweep_csv(const SweepResult &result, const SweepPlan &plan,
                    const std::filesystem::path &path)
{
    const std::vector<std::string> header = {"m",      "phi_az_deg", "phi_el_deg",
                                             "tau_s",  "nu",         "p_ave",
                                             "selected", "d_hat_m",  "v_hat_mps"};
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < result.per_angle.size(); ++m)
    {
        const auto &det = result.per_angle[m];
        const bool selected = m == result.selected;
        rows.push_back({std::to_string(m), fmt(plan.angles[m].azimuth * kRadToDeg),
                        fmt(plan.angles[m].elevation * kRadToDeg), fmt(det.tau_s), fmt(det.nu),
                        fmt(det.average_power), selected ? "1" : "0",
                        selected ? fmt(result.distance_hat_m) : std::string(),
                        selected ? fmt(result.velocity_hat_mps) : std::string()});
    }
    csv::write_table(path, header, rows);
}

void emit_diagnostics_csv(const DiagnosticsBundle &bundle, const std::filesystem::path &prefix)
{
    // Beam profile: average power per sweep angle.
    {
        const std::vector<std::string> header = {"m", "phi_az_deg", "phi_el_deg", "p_ave",
                                                 "selected"};
        std::vector<std::vector<std::string>> rows;
        for (std::size_t m = 0; m < bundle.result.per_angle.size(); ++m)
            rows.push_back({std::to_string(m), fmt(bundle.plan.angles[m].azimuth * kRadToDeg),
                            fmt(bundle.plan.angles[m].elevation * kRadToDeg),
                            fmt(bundle.result.per_angle[m].average_power),
                            m == bundle.result.selected ? "1" : "0"});
        csv::write_table(prefix.string() + "_beam_profile.csv", header, rows);
    }

    // 1D distance profile at the zero-Doppler row.
    {
        const std::vector<std::string> header = {"distance_m", "power"};
        std::vector<std::vector<std::string>> rows;
        for (std::size_t n = 0; n < bundle.distance_axis_m.size(); ++n)
            rows.push_back({fmt(bundle.distance_axis_m[n]), fmt(bundle.distance_profile[n])});
        csv::write_table(prefix.string() + "_distance_profile.csv", header, rows);
    }

    // Full delay-velocity power map at the selected angle, one column per
    // velocity in ascending order.
    {
        const auto &map = bundle.selected_map;
        const int n_dft = map.n_dft();
        const int k_dft = map.k_dft();

        std::vector<int> order(static_cast<std::size_t>(k_dft));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return map.doppler_at(a) < map.doppler_at(b); });

        std::vector<std::string> header;
        header.reserve(static_cast<std::size_t>(k_dft) + 1);
        header.emplace_back("distance_m");
        for (int k : order)
            header.push_back(fmt(map.doppler_at(k) * kSpeedOfLight / 2.0));

        std::vector<std::vector<std::string>> rows;
        rows.reserve(static_cast<std::size_t>(n_dft));
        for (int n = 0; n < n_dft; ++n)
        {
            std::vector<std::string> row;
            row.reserve(static_cast<std::size_t>(k_dft) + 1);
            row.push_back(fmt(map.delay_at(n) * kSpeedOfLight / 2.0));
            for (int k : order)
                row.push_back(fmt(std::norm(map.values(n, k))));
            rows.push_back(std::move(row));
        }
        csv::write_table(prefix.string() + "_map.csv", header, rows);
    }
}

} // namespace risloc
