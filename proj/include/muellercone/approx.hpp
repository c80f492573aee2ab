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

#ifndef MUELLERCONE_APPROX_HPP
#define MUELLERCONE_APPROX_HPP

#include <cmath>
#include <stdexcept>

#include "muellercone/mueller.hpp"
#include "muellercone/numkernel.hpp"

namespace muellercone {

enum class ApproxPath {
    AlreadyMueller,
    ShiftedByE11,
    AlreadyInvertible,
    ShiftedByIdentity,
    Composite,
};

inline const char* to_string(ApproxPath p) {
    switch (p) {
        case ApproxPath::AlreadyMueller: return "AlreadyMueller";
        case ApproxPath::ShiftedByE11: return "ShiftedByE11";
        case ApproxPath::AlreadyInvertible: return "AlreadyInvertible";
        case ApproxPath::ShiftedByIdentity: return "ShiftedByIdentity";
        default: return "Composite";
    }
}

/// Output of an approximation operator. changed == false means output equals
/// the input bit for bit. epsilon_used records the applied diagonal shift:
/// 2*||A||_2 on the ShiftedByE11 path, the epsilon of the identity shift on
/// ShiftedByIdentity/Composite, rho+epsilon for the spectral variant, and 0
/// whenever the input was returned unchanged.
struct ApproxResult {
    Matrix4 output = Matrix4::Zero();
    bool changed = false;
    double epsilon_used = 0.0;
    ApproxPath path = ApproxPath::AlreadyMueller;
};

/// The rank-one projector onto the intensity axis: entry (0,0) = 1, rest 0.
/// Idempotent, unit spectral norm, and interior to the Mueller cone.
inline const Matrix4& e11() {
    static const Matrix4 m = [] {
        Matrix4 x = Matrix4::Zero();
        x(0, 0) = 1.0;
        return x;
    }();
    return m;
}

/// Nearest certified route to a Mueller matrix: leave verified inputs alone,
/// otherwise shift by 2*||A||_2 * E11 (the shifted matrix always satisfies
/// the certificate; the distance of the shift is exactly 2*||A||_2).
inline ApproxResult approx_mueller(const Matrix4& a, int resolution = 1001,
                                   const Tolerances& tol = {}) {
    detail::require_finite(a, "approx_mueller");
    if (is_mueller(a, resolution, tol).verdict)
        return {a, false, 0.0, ApproxPath::AlreadyMueller};
    const double shift = 2.0 * spectral_norm(a);
    return {a + shift * e11(), true, shift, ApproxPath::ShiftedByE11};
}

/// Shift a singular matrix to an invertible one: epsilon starts at
/// min(1/100, |lambda_min != 0|/2) (1/100 when the spectrum is all zero) and
/// is halved until neither +epsilon nor -epsilon collides with an eigenvalue,
/// so det(epsilon I + A) != 0 is guaranteed. The singularity test is scale
/// invariant: |det A| <= zero_tol * ||A||_2^4 counts as singular.
inline ApproxResult make_invertible(const Matrix4& a, const Tolerances& tol = {}) {
    detail::require_finite(a, "make_invertible");
    const double norm = spectral_norm(a);
    const double det_threshold = tol.zero_tol * norm * norm * norm * norm;
    if (std::abs(a.determinant()) > det_threshold)
        return {a, false, 0.0, ApproxPath::AlreadyInvertible};

    const auto pairs = eigen_decompose(a, tol);
    double eps = 0.01;
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs) {
        const double mod = std::abs(p.value);
        if (mod > tol.zero_tol) smallest = std::min(smallest, mod);
    }
    if (std::isfinite(smallest)) eps = std::min(eps, 0.5 * smallest);

    auto collides = [&](double e) {
        for (const auto& p : pairs)
            if (std::abs(p.value - e) <= tol.zero_tol || std::abs(p.value + e) <= tol.zero_tol)
                return true;
        return false;
    };
    for (int guard = 0; guard < 200 && collides(eps); ++guard) eps *= 0.5;

    return {Matrix4(a + eps * Matrix4::Identity()), true, eps, ApproxPath::ShiftedByIdentity};
}

/// The composite route used by the calibration pipeline: Mueller shift first,
/// then the invertibility shift. Output passes the certificate and has a
/// nonzero determinant.
inline ApproxResult approx_invertible_mueller(const Matrix4& a, int resolution = 1001,
                                              const Tolerances& tol = {}) {
    const ApproxResult mu = approx_mueller(a, resolution, tol);
    const ApproxResult inv = make_invertible(mu.output, tol);
    return {inv.output, mu.changed || inv.changed, inv.epsilon_used, ApproxPath::Composite};
}

/// Spectral variant: with B = A + 2*||A||_2*E11 and rho its spectral radius,
/// returns (rho + epsilon) I + B. Shifting past the spectral radius clears
/// every eigenvalue away from zero, so the result is invertible as well as
/// Mueller. epsilon_used records the full diagonal shift rho + epsilon.
inline ApproxResult approx_invertible_mueller_spectral(const Matrix4& a, double epsilon,
                                                       int resolution = 1001,
                                                       const Tolerances& tol = {}) {
    (void)resolution;
    detail::require_finite(a, "approx_invertible_mueller_spectral");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("approx_invertible_mueller_spectral: epsilon must be > 0");
    const Matrix4 b = a + 2.0 * spectral_norm(a) * e11();
    double rho = 0.0;
    for (const auto& p : eigen_decompose(b, tol)) rho = std::max(rho, std::abs(p.value));
    const double shift = rho + epsilon;
    return {Matrix4(shift * Matrix4::Identity() + b), true, shift, ApproxPath::Composite};
}

/// Primitivity shift M + (2/n) E11 of a certified Mueller matrix; converges
/// to M entrywise as n grows (the distance is exactly 2/n).
///
/// Throws std::domain_error when M fails the Mueller certificate and
/// std::invalid_argument for n < 1.
inline Matrix4 approx_primitive(const Matrix4& m, int n, int resolution = 1001,
                                const Tolerances& tol = {}) {
    detail::require_finite(m, "approx_primitive");
    if (n < 1) throw std::invalid_argument("approx_primitive: n must be >= 1");
    if (!is_mueller(m, resolution, tol).verdict)
        throw std::domain_error(
            "approx_primitive: input must pass the Mueller certificate first");
    return m + (2.0 / n) * e11();
}

}  // namespace muellercone

#endif  // MUELLERCONE_APPROX_HPP
