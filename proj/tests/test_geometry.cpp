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

#include "risloc/geometry.hpp"
#include "risloc/random.hpp"

#include <cmath>
#include <numbers>

using namespace risloc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLambda = 0.005;

Direction random_direction(RandomStream &rng)
{
    return Direction(rng.uniform(-kPi, kPi), rng.uniform(-kPi / 2, kPi / 2));
}
} // namespace

TEST_CASE("wavenumber vector: boresight and scaling")
{
    const auto g = wavenumber_vector(Direction(0.0, 0.0), kLambda);
    CHECK(g.norm() == Catch::Approx(2.0 * kPi / kLambda).epsilon(1e-12)); // 1256.64 rad/m
    CHECK(g.x() == Catch::Approx(0.0).margin(1e-12));
    CHECK(g.y() == Catch::Approx(2.0 * kPi / kLambda).epsilon(1e-12));
    CHECK(g.z() == Catch::Approx(0.0).margin(1e-12));

    // Halving the wavelength doubles the vector.
    const auto g2 = wavenumber_vector(Direction(0.3, -0.2), kLambda / 2);
    const auto g1 = wavenumber_vector(Direction(0.3, -0.2), kLambda);
    CHECK((g2 - 2.0 * g1).norm() < 1e-9);
}

TEST_CASE("wavenumber vector: 45-degree azimuth against scalar trig")
{
    // Hand evaluation: (2 pi / 0.005) * [sin(pi/4) cos 0, cos(pi/4) cos 0, 0].
    const auto g = wavenumber_vector(Direction(kPi / 4, 0.0), kLambda);
    CHECK(g.x() == Catch::Approx(888.5765876316732).epsilon(1e-12));
    CHECK(g.y() == Catch::Approx(888.5765876316732).epsilon(1e-12));
    CHECK(g.z() == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("wavenumber vector: invalid input")
{
    CHECK_THROWS_AS(wavenumber_vector(Direction(0, 0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wavenumber_vector(Direction(0, 0), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(4.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(0.0, 2.0), std::invalid_argument);
}

TEST_CASE("wavenumber norm invariant over random directions")
{
    RandomStream rng(11);
    for (int i = 0; i < 200; ++i)
    {
        const Direction dir = random_direction(rng);
        const double lambda = rng.uniform(1e-3, 1.0);
        CHECK(std::abs(wavenumber_vector(dir, lambda).norm() * lambda / (2.0 * kPi) - 1.0) <
              1e-12);
    }
}

TEST_CASE("steering vector: single element and unit modulus")
{
    const ArrayLayout single = make_upa(1, 1, kLambda / 2);
    const auto a = steering_vector(single, Direction(0.4, 0.1), kLambda);
    REQUIRE(a.size() == 1);
    CHECK(std::abs(a[0] - std::complex<double>(1.0, 0.0)) < 1e-15);

    RandomStream rng(17);
    const ArrayLayout layout = make_upa(16, 4, kLambda / 2);
    for (int i = 0; i < 50; ++i)
    {
        const auto v = steering_vector(layout, random_direction(rng), kLambda);
        for (Eigen::Index n = 0; n < v.size(); ++n)
            CHECK(std::abs(std::abs(v[n]) - 1.0) < 1e-12);
    }
}

TEST_CASE("steering vector: half-wavelength pair has pi phase difference at endfire")
{
    // Elements at x = +-lambda/4; u_x = 1 for azimuth pi/2, elevation 0.
    const ArrayLayout pair = make_upa(2, 1, kLambda / 2);
    const auto a = steering_vector(pair, Direction(kPi / 2, 0.0), kLambda);
    REQUIRE(a.size() == 2);
    const double diff = std::arg(a[1] / a[0]);
    CHECK(std::abs(std::abs(diff) - kPi) < 1e-12);
}

TEST_CASE("ris phase profile: conjugate-squared relation and alignment gain")
{
    const ArrayLayout layout = make_upa(16, 4, kLambda / 2);
    const Direction dir(0.23, -0.11);
    const auto a = steering_vector(layout, dir, kLambda);
    const auto w = ris_phase_profile(layout, dir, kLambda);

    for (Eigen::Index i = 0; i < a.size(); ++i)
    {
        CHECK(std::abs(std::abs(w[i]) - 1.0) < 1e-12);
        const std::complex<double> conj_sq = std::conj(a[i]) * std::conj(a[i]);
        CHECK(std::abs(w[i] - conj_sq) < 1e-12);
    }

    // Beam-alignment: sum_i a_i^2 w_i = N when the profile matches the AOD.
    std::complex<double> gain{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.size(); ++i)
        gain += a[i] * w[i] * a[i];
    CHECK(std::abs(gain - std::complex<double>(64.0, 0.0)) < 64.0 * 1e-12);
}

TEST_CASE("beam response: matched-beam equals N, bounded elsewhere")
{
    for (const auto &[naz, nel] : {std::pair{16, 4}, std::pair{16, 16}})
    {
        const ArrayLayout layout = make_upa(naz, nel, kLambda / 2);
        const double n_total = static_cast<double>(naz) * nel;
        const Direction theta(0.1, 0.05);
        CHECK(std::abs(beam_response(layout, theta, theta, kLambda)) ==
              Catch::Approx(n_total).epsilon(1e-9));

        for (int i = 0; i <= 60; ++i)
        {
            const Direction phi((-45.0 + 1.5 * i) * kPi / 180.0, 0.0);
            CHECK(std::abs(beam_response(layout, theta, phi, kLambda)) <=
                  n_total * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("beam response: half-wavelength pitch aliases the doubled phase")
{
    // The retro profile doubles the per-element phase, so lambda/2 pitch
    // produces a full-strength response at |sin(theta) - sin(phi)| = 1.
    // Quarter-wavelength pitch does not.
    const Direction theta(kPi / 6, 0.0); // sin = 0.5
    const Direction alias(std::asin(-0.5), 0.0);

    const ArrayLayout half = make_upa(16, 4, kLambda / 2);
    CHECK(std::abs(beam_response(half, theta, alias, kLambda)) ==
          Catch::Approx(64.0).epsilon(1e-9));

    const ArrayLayout quarter = make_upa(16, 4, kLambda / 4);
    CHECK(std::abs(beam_response(quarter, theta, alias, kLambda)) < 64.0 * 0.2);
}

TEST_CASE("make_upa: shapes, extents, centroid")
{
    const ArrayLayout single = make_upa(1, 1, 0.01);
    REQUIRE(single.size() == 1);
    CHECK(single.elements.col(0).norm() == 0.0);

    const double s = 0.0025;
    const ArrayLayout big = make_upa(16, 4, s);
    REQUIRE(big.size() == 64);
    CHECK(big.elements.row(0).maxCoeff() - big.elements.row(0).minCoeff() ==
          Catch::Approx(15 * s).epsilon(1e-12));
    CHECK(big.elements.row(2).maxCoeff() - big.elements.row(2).minCoeff() ==
          Catch::Approx(3 * s).epsilon(1e-12));
    CHECK(big.elements.row(1).cwiseAbs().maxCoeff() == 0.0); // xz plane
    CHECK(big.elements.rowwise().mean().norm() < 1e-12 * s); // centroid at origin

    const ArrayLayout pair = make_upa(2, 1, s);
    CHECK(pair.elements(0, 0) == Catch::Approx(-s / 2));
    CHECK(pair.elements(0, 1) == Catch::Approx(s / 2));

    CHECK_THROWS_AS(make_upa(0, 1, s), std::invalid_argument);
    CHECK_THROWS_AS(make_upa(1, 1, 0.0), std::invalid_argument);
}

TEST_CASE("direction_to_global: identity, zero distance, antipodal symmetry")
{
    const Position3 ris(0.0, 13.38, 0.0);
    const Orientation ident = Orientation::identity();

    CHECK((direction_to_global(Direction(0.3, 0.2), 0.0, ris, ident) - ris).norm() == 0.0);

    // Boresight at 13.38 m from the reference geometry.
    const Position3 p = direction_to_global(Direction(0, 0), 13.38, ris, ident);
    CHECK((p - Position3(0.0, 26.76, 0.0)).norm() < 1e-12);

    const Direction d1(0.7, 0.3);
    const Direction d2(0.7 - kPi, -0.3); // antipodal direction
    const Position3 a = direction_to_global(d1, 5.0, ris, ident);
    const Position3 b = direction_to_global(d2, 5.0, ris, ident);
    CHECK(((a + b) / 2.0 - ris).norm() < 1e-12);

    CHECK_THROWS_AS(direction_to_global(d1, -1.0, ris, ident), std::invalid_argument);
}

TEST_CASE("orientation: validation and global/local round trip")
{
    Orientation bad;
    bad.rotation(0, 0) = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    Orientation reflect;
    reflect.rotation = Eigen::Matrix3d::Identity();
    reflect.rotation(2, 2) = -1.0;
    CHECK_THROWS_AS(reflect.validate(), std::invalid_argument);

    const Orientation yaw = Orientation::from_yaw(kPi);
    CHECK_NOTHROW(yaw.validate());

    RandomStream rng(23);
    for (int i = 0; i < 100; ++i)
    {
        const Orientation orient = Orientation::from_yaw(rng.uniform(-kPi, kPi));
        const Direction dir = random_direction(rng);
        const double d = rng.uniform(0.1, 50.0);
        const Position3 ris(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5));
        const Position3 target = direction_to_global(dir, d, ris, orient);
        const Direction back = direction_from_global(target, ris, orient);
        CHECK(std::abs(back.azimuth - dir.azimuth) < 1e-9);
        CHECK(std::abs(back.elevation - dir.elevation) < 1e-9);
    }
}
