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

#ifndef MUELLERCONE_STOKES_HPP
#define MUELLERCONE_STOKES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "muellercone/numkernel.hpp"

namespace muellercone {

/// A candidate Stokes vector (a; v): intensity a and polarization part v.
/// The type carries no constraint of its own; membership in the light cone
/// K = {a >= 0, a^2 >= |v|^2} is decided by classify().
struct StokesVector {
    double a = 0.0;
    Eigen::Vector3d v = Eigen::Vector3d::Zero();

    StokesVector() = default;
    StokesVector(double intensity, const Eigen::Vector3d& pol) : a(intensity), v(pol) {}
    StokesVector(double intensity, double x, double y, double z)
        : a(intensity), v(x, y, z) {}

    static StokesVector from_vector(const Vector4& s) {
        return StokesVector(s[0], Eigen::Vector3d(s[1], s[2], s[3]));
    }
    Vector4 to_vector() const { return Vector4(a, v[0], v[1], v[2]); }
};

/// Position of a 4-vector relative to the light cone under a fixed tolerance.
enum class ConeClass { Interior, Boundary, Outside };

inline const char* to_string(ConeClass c) {
    switch (c) {
        case ConeClass::Interior: return "Interior";
        case ConeClass::Boundary: return "Boundary";
        default: return "Outside";
    }
}

/// The signature (+,-,-,-) quadratic form q_G(s) = s^T (G s) with
/// G = diag(1,-1,-1,-1); equals a^2 - |v|^2.
inline double q_g(const StokesVector& s) {
    const Vector4 x = s.to_vector();
    Vector4 gx = x;
    gx.tail<3>() = -gx.tail<3>();
    return x.dot(gx);
}

/// Trichotomy of a 4-vector against the cone. Boundary is a band of width
/// zero_tol around q_G = 0 (the apex classifies Boundary); Outside when either
/// the intensity or the form is negative beyond tolerance.
inline ConeClass classify(const StokesVector& s, const Tolerances& tol = {}) {
    const double q = q_g(s);
    if (s.a < -tol.zero_tol || q < -tol.zero_tol) return ConeClass::Outside;
    if (std::abs(q) <= tol.zero_tol) return ConeClass::Boundary;
    return ConeClass::Interior;
}

/// Split a nonzero cone vector into (scale, point on the intensity-1 slice):
/// scale * slice_point == s with slice_point = (1; v/a).
///
/// Throws std::domain_error for the zero vector / zero intensity (no slice
/// representative) and for vectors outside the cone.
inline std::pair<double, StokesVector> slice_decompose(const StokesVector& s,
                                                       const Tolerances& tol = {}) {
    if (classify(s, tol) == ConeClass::Outside)
        throw std::domain_error("slice_decompose: vector lies outside the cone");
    if (s.a <= tol.zero_tol)
        throw std::domain_error(
            "slice_decompose: zero intensity, the ray has no slice representative");
    return {s.a, StokesVector(1.0, s.v / s.a)};
}

/// The 6 signed polarization axes (0; +-e_i), the canonical probe directions
/// for interior_criterion.
inline std::array<StokesVector, 6> polarization_axis_probes() {
    std::array<StokesVector, 6> probes;
    int k = 0;
    for (int i = 0; i < 3; ++i)
        for (double sgn : {1.0, -1.0}) {
            Eigen::Vector3d e = Eigen::Vector3d::Zero();
            e[i] = sgn;
            probes[k++] = StokesVector(0.0, e);
        }
    return probes;
}

/// Empirical interior witness: z is reported interior when for every probe
/// direction x some backward step z - lambda*x, lambda in {2^-k : k=0..40},
/// stays inside the cone.
///
/// Membership along the sweep is exact (a >= 0 and q_G >= 0 with no tolerance
/// band): at the smallest lambdas the step-induced change in q_G falls below
/// any nonzero band, which would make every boundary point pass vacuously.
template <class ProbeRange>
inline bool interior_criterion(const StokesVector& z, const ProbeRange& probes,
                               const Tolerances& = {}) {
    for (const StokesVector& x : probes) {
        bool found = false;
        double lambda = 1.0;
        for (int k = 0; k <= 40; ++k, lambda *= 0.5) {
            const StokesVector step(z.a - lambda * x.a, (z.v - lambda * x.v).eval());
            if (step.a >= 0.0 && q_g(step) >= 0.0) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace muellercone

#endif  // MUELLERCONE_STOKES_HPP
