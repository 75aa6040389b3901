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

#include "risloc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risloc {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char *what)
{
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be finite");
}
} // namespace

Direction::Direction(double az, double el) : azimuth(az), elevation(el)
{
    require_finite(az, "azimuth");
    require_finite(el, "elevation");
    if (az < -kPi || az > kPi)
        throw std::invalid_argument("azimuth outside [-pi, pi]");
    if (el < -kPi / 2.0 || el > kPi / 2.0)
        throw std::invalid_argument("elevation outside [-pi/2, pi/2]");
}

Orientation Orientation::identity()
{
    return Orientation{};
}

Orientation Orientation::from_yaw(double yaw_rad)
{
    require_finite(yaw_rad, "yaw");
    Orientation o;
    const double c = std::cos(yaw_rad), s = std::sin(yaw_rad);
    o.rotation << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
    return o;
}

void Orientation::validate() const
{
    const Eigen::Matrix3d gram = rotation.transpose() * rotation;
    if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("orientation columns are not orthonormal");
    if (std::abs(rotation.determinant() - 1.0) > 1e-12)
        throw std::invalid_argument("orientation determinant is not +1");
}

Eigen::Vector3d unit_vector(const Direction &dir)
{
    const double caz = std::cos(dir.azimuth), saz = std::sin(dir.azimuth);
    const double cel = std::cos(dir.elevation), sel = std::sin(dir.elevation);
    return {saz * cel, caz * cel, sel};
}

Direction direction_of(const Eigen::Vector3d &u)
{
    const double n = u.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("cannot take the direction of a zero vector");
    const Eigen::Vector3d v = u / n;
    const double el = std::asin(std::clamp(v.z(), -1.0, 1.0));
    double az = 0.0;
    if (std::abs(v.x()) > 0.0 || std::abs(v.y()) > 0.0)
        az = std::atan2(v.x(), v.y());
    return Direction(az, el);
}

Eigen::Vector3d wavenumber_vector(const Direction &dir, double wavelength)
{
    require_finite(wavelength, "wavelength");
    if (wavelength <= 0.0)
        throw std::invalid_argument("wavelength must be positive");
    return (2.0 * kPi / wavelength) * unit_vector(dir);
}

Eigen::VectorXcd steering_vector(const ArrayLayout &layout, const Direction &dir,
                                 double wavelength)
{
    if (layout.size() == 0)
        throw std::invalid_argument("steering_vector: empty array layout");
    const Eigen::Vector3d g = wavenumber_vector(dir, wavelength);
    const Eigen::VectorXd phase = layout.elements.transpose() * g;
    Eigen::VectorXcd a(phase.size());
    for (Eigen::Index i = 0; i < phase.size(); ++i)
        a[i] = std::polar(1.0, phase[i]);
    return a;
}

Eigen::VectorXcd ris_phase_profile(const ArrayLayout &layout, const Direction &sweep_dir,
                                   double wavelength)
{
    if (layout.size() == 0)
        throw std::invalid_argument("ris_phase_profile: empty array layout");
    const Eigen::Vector3d g = wavenumber_vector(sweep_dir, wavelength);
    const Eigen::VectorXd phase = layout.elements.transpose() * g;
    Eigen::VectorXcd w(phase.size());
    for (Eigen::Index i = 0; i < phase.size(); ++i)
        w[i] = std::polar(1.0, -2.0 * phase[i]);
    return w;
}

std::complex<double> beam_response(const ArrayLayout &layout, const Direction &theta,
                                   const Direction &phi, double wavelength)
{
    // a^T diag(w) a collapses to a sum of exp(2j <x_i, g(theta) - g(phi)>).
    const Eigen::Vector3d dg =
        wavenumber_vector(theta, wavelength) - wavenumber_vector(phi, wavelength);
    const Eigen::VectorXd phase = layout.elements.transpose() * dg;
    std::complex<double> sum{0.0, 0.0};
    for (Eigen::Index i = 0; i < phase.size(); ++i)
        sum += std::polar(1.0, 2.0 * phase[i]);
    return sum;
}

ArrayLayout make_upa(int n_az, int n_el, double spacing)
{
    if (n_az < 1 || n_el < 1)
        throw std::invalid_argument("make_upa: element counts must be >= 1");
    require_finite(spacing, "spacing");
    if (spacing <= 0.0)
        throw std::invalid_argument("make_upa: spacing must be positive");

    ArrayLayout layout;
    layout.n_az = n_az;
    layout.n_el = n_el;
    layout.elements.resize(3, static_cast<Eigen::Index>(n_az) * n_el);
    const double x0 = -0.5 * (n_az - 1) * spacing;
    const double z0 = -0.5 * (n_el - 1) * spacing;
    Eigen::Index c = 0;
    for (int iz = 0; iz < n_el; ++iz)
        for (int ix = 0; ix < n_az; ++ix)
            layout.elements.col(c++) = Eigen::Vector3d(x0 + ix * spacing, 0.0, z0 + iz * spacing);
    return layout;
}

Position3 direction_to_global(const Direction &dir, double d, const Position3 &ris_pos,
                              const Orientation &orient)
{
    require_finite(d, "distance");
    if (d < 0.0)
        throw std::invalid_argument("direction_to_global: distance must be non-negative");
    return ris_pos + orient.rotation * (d * unit_vector(dir));
}

Direction direction_from_global(const Position3 &target, const Position3 &ris_pos,
                                const Orientation &orient)
{
    return direction_of(orient.rotation.transpose() * (target - ris_pos));
}

} // namespace risloc
