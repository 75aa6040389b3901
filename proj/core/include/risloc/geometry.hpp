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
#include <complex>

namespace risloc {

using Position3 = Eigen::Vector3d;

/*!
 * Boresight-referenced direction. (0,0) points along the local +y axis
 * (the array normal); azimuth rotates in the local xy plane, elevation
 * tilts toward +z. Azimuth is restricted to [-pi, pi], elevation to
 * [-pi/2, pi/2].
 */
struct Direction
{
    double azimuth = 0.0;   // rad
    double elevation = 0.0; // rad

    Direction() = default;
    Direction(double az, double el);
};

/// Rotation from the array-local frame to the global frame.
struct Orientation
{
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();

    static Orientation identity();

    /// Rotation about the global z axis.
    static Orientation from_yaw(double yaw_rad);

    /// Throws std::invalid_argument unless the matrix is a proper rotation
    /// (orthonormal columns to 1e-12, determinant +1).
    void validate() const;
};

/*!
 * Planar array in the local xz plane. Element positions are stored as the
 * columns of a 3 x N matrix (meters, local frame) with zero centroid.
 */
struct ArrayLayout
{
    Eigen::Matrix3Xd elements;
    int n_az = 0;
    int n_el = 0;

    Eigen::Index size() const { return elements.cols(); }
};

/// Unit propagation vector for a boresight-referenced direction:
/// [sin(az)cos(el), cos(az)cos(el), sin(el)].
Eigen::Vector3d unit_vector(const Direction &dir);

/// Recovers the boresight-referenced direction of a unit-ish vector.
Direction direction_of(const Eigen::Vector3d &u);

/// (2*pi/wavelength) * unit_vector(dir). Norm is always 2*pi/wavelength.
Eigen::Vector3d wavenumber_vector(const Direction &dir, double wavelength);

/// Array response a(dir): element i is exp(j <x_i, g(dir)>). All entries
/// have unit modulus.
Eigen::VectorXcd steering_vector(const ArrayLayout &layout, const Direction &dir,
                                 double wavelength);

/*!
 * Reconfiguration profile for a sweep direction: element i is
 * exp(-2j <x_i, g(dir)>). The factor 2 conjugates the round-trip phase, so
 * a(theta)^T diag(profile) a(theta) sums to N when the sweep direction
 * matches theta.
 */
Eigen::VectorXcd ris_phase_profile(const ArrayLayout &layout, const Direction &sweep_dir,
                                   double wavelength);

/// a(theta)^T diag(ris_phase_profile(phi)) a(theta), the retro path's
/// array factor. |result| <= N with equality at phi == theta.
std::complex<double> beam_response(const ArrayLayout &layout, const Direction &theta,
                                   const Direction &phi, double wavelength);

/// Centered n_az x n_el grid in the local xz plane (azimuth axis = x,
/// elevation axis = z).
ArrayLayout make_upa(int n_az, int n_el, double spacing);

/// ris_pos + orient * (d * unit_vector(dir)).
Position3 direction_to_global(const Direction &dir, double d, const Position3 &ris_pos,
                              const Orientation &orient);

/// Direction of `target` as seen from `ris_pos` in the array-local frame.
Direction direction_from_global(const Position3 &target, const Position3 &ris_pos,
                                const Orientation &orient);

} // namespace risloc
