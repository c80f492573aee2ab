// SPDX-License-Identifier: Apache-2.0
//
// mueller-cone: cone-side numerics for Stokes vectors and Mueller matrices
// Copyright (C) 2026 the mueller-cone authors
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

#ifndef MUELLERCONE_FIXTURES_HPP
#define MUELLERCONE_FIXTURES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "muellercone/numkernel.hpp"

namespace muellercone {

/// A named matrix with its known classification. expected_* fields are left
/// empty when the answer is meant to be computed, never hand-asserted.
struct Fixture {
    std::string name;
    Matrix4 matrix = Matrix4::Zero();
    std::optional<bool> expected_mueller;
    std::optional<bool> expected_primitive;
    std::string source;
};

namespace detail {

inline Matrix4 block_matrix(double a, const Eigen::Vector3d& w0, const Eigen::Vector3d& v0,
                            const Eigen::Matrix3d& m) {
    Matrix4 out;
    out(0, 0) = a;
    out.block<1, 3>(0, 1) = w0.transpose();
    out.block<3, 1>(1, 0) = v0;
    out.block<3, 3>(1, 1) = m;
    return out;
}

inline Eigen::Matrix3d rot_z(double angle) {
    Eigen::Matrix3d r;
    r << std::cos(angle), -std::sin(angle), 0.0,
         std::sin(angle),  std::cos(angle), 0.0,
         0.0,              0.0,             1.0;
    return r;
}

}  // namespace detail

/// The shared golden matrix suite: the basic cone-preserving matrices, the
/// rank-one basis family, the first-row/first-column/submatrix families, the
/// split-norm family, the standard counterexamples, and the two rotation
/// fixtures used by the spectral tests.
inline const std::vector<Fixture>& golden_suite() {
    static const std::vector<Fixture> suite = [] {
        std::vector<Fixture> fx;
        const Eigen::Vector3d zero3 = Eigen::Vector3d::Zero();
        const Eigen::Matrix3d zero33 = Eigen::Matrix3d::Zero();

        fx.push_back({"identity", Matrix4::Identity(), true, std::nullopt, "identity"});
        fx.push_back({"zero", Matrix4::Zero(), true, std::nullopt, "zero matrix"});
        fx.push_back({"G", Eigen::Vector4d(1, -1, -1, -1).asDiagonal(), true, false,
                      "polarization sign flip"});
        {
            Matrix4 e11 = Matrix4::Zero();
            e11(0, 0) = 1.0;
            fx.push_back({"E11", e11, true, true, "intensity projector"});
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                Matrix4 m = Matrix4::Zero();
                m(0, 0) += 1.0;
                m(i - 1, j - 1) += 1.0;
                const std::string name = "E11+E" + std::to_string(i) + std::to_string(j);
                // 2*E11 is the projector scaled, interior like E11 itself.
                fx.push_back({name, m, true,
                              (i == 1 && j == 1) ? std::optional<bool>(true) : std::nullopt,
                              "rank-one basis family"});
            }

        const std::vector<std::pair<std::string, Eigen::Vector3d>> v0_choices = {
            {"x", {1.0, 0.0, 0.0}}, {"xy", {0.5, 0.5, 0.0}}, {"negz", {0.0, 0.0, -1.0}}};
        for (const auto& [tag, v0] : v0_choices) {
            fx.push_back({"first-row-" + tag, detail::block_matrix(1.0, v0, zero3, zero33),
                          true, std::nullopt, "first-row family"});
            fx.push_back({"first-col-" + tag, detail::block_matrix(1.0, zero3, v0, zero33),
                          true, std::nullopt, "first-column family"});
        }
        fx.push_back({"submatrix-I3",
                      detail::block_matrix(1.0, zero3, zero3, Eigen::Matrix3d::Identity()),
                      true, std::nullopt, "submatrix family"});
        fx.push_back({"submatrix-negI3",
                      detail::block_matrix(1.0, zero3, zero3, -Eigen::Matrix3d::Identity()),
                      true, std::nullopt, "submatrix family"});
        fx.push_back({"submatrix-halfI3",
                      detail::block_matrix(1.0, zero3, zero3, 0.5 * Eigen::Matrix3d::Identity()),
                      true, std::nullopt, "submatrix family"});

        fx.push_back({"split-orthogonal",
                      detail::block_matrix(1.0, {0.0, 0.5, 0.0}, {0.5, 0.0, 0.0}, zero33),
                      true, std::nullopt, "split-norm family |v0|+|w0| = 1"});
        fx.push_back({"split-antiparallel",
                      detail::block_matrix(1.0, {-0.75, 0.0, 0.0}, {0.25, 0.0, 0.0}, zero33),
                      true, std::nullopt, "split-norm family |v0|+|w0| = 1"});
        fx.push_back({"split-parallel-z",
                      detail::block_matrix(1.0, {0.0, 0.0, 0.4}, {0.0, 0.0, 0.6}, zero33),
                      true, std::nullopt, "split-norm family |v0|+|w0| = 1"});

        fx.push_back({"neg-unit", Eigen::Vector4d(-1, 0, 0, 0).asDiagonal(), false,
                      std::nullopt, "sign-flipped projector, not cone preserving"});
        fx.push_back({"neg-two-diag", Eigen::Vector4d(-2, 1, 1, 1).asDiagonal(), false,
                      std::nullopt, "dominant modulus not an eigenvalue"});

        fx.push_back({"rot-quarter-z",
                      detail::block_matrix(1.0, zero3, zero3, detail::rot_z(M_PI / 2)),
                      true, false, "quarter-turn about z, fixes a boundary ray"});
        {
            Eigen::Matrix3d m = detail::rot_z(M_PI / 3);
            m(2, 2) = 0.5;
            fx.push_back({"rot-third-xy-damped-z", detail::block_matrix(1.0, zero3, zero3, m),
                          true, false, "irreducible but with peripheral rotation pair"});
        }

        fx.push_back({"reflector-shifted", Eigen::Vector4d(3, -1, -1, -1).asDiagonal(), true,
                      true, "sign flip plus dominant intensity shift"});
        fx.push_back({"axis-dominant", Eigen::Vector4d(2, 1, 1, 1).asDiagonal(), true, true,
                      "dominant intensity axis"});
        return fx;
    }();
    return suite;
}

/// Lookup by name; throws std::out_of_range for unknown names.
inline const Fixture& find_fixture(std::string_view name) {
    for (const auto& f : golden_suite())
        if (f.name == name) return f;
    throw std::out_of_range("unknown fixture: " + std::string(name));
}

}  // namespace muellercone

#endif  // MUELLERCONE_FIXTURES_HPP
