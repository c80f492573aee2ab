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

#ifndef MUELLERCONE_MUELLER_HPP
#define MUELLERCONE_MUELLER_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "muellercone/numkernel.hpp"
#include "muellercone/stokes.hpp"

namespace muellercone {

/// Result of the sampled Mueller certificate: minima of the quadratic form
/// q and the output intensity b over the sampled unit sphere, with argmins.
///
/// verdict == (min_q >= -tol && min_b >= -tol); "true" means no violation was
/// found on the grid, so callers can refine by raising the resolution.
struct MuellerReport {
    bool verdict = false;
    double min_q = 0.0;
    Eigen::Vector3d argmin_q = Eigen::Vector3d::Zero();
    double min_b = 0.0;
    Eigen::Vector3d argmin_b = Eigen::Vector3d::Zero();
    std::int64_t samples = 0;
    double tol = 0.0;
    int resolution = 0;
};

/// Values of one probe: b is the output intensity of M(1;u), q the quadratic
/// form q_G evaluated at the output. M maps (1;u) into the cone iff both are
/// nonnegative.
struct GapValues {
    double b = 0.0;
    double q = 0.0;
};

namespace detail {

inline GapValues gap_unchecked(const Matrix4& m, const Eigen::Vector3d& u) {
    const Vector4 s = m * Vector4(1.0, u[0], u[1], u[2]);
    return {s[0], q_g(StokesVector::from_vector(s))};
}

}  // namespace detail

/// Evaluate the certificate at a single unit direction u (|u| = 1 within
/// 1e-9, else std::domain_error).
inline GapValues gap(const Matrix4& m, const Eigen::Vector3d& u) {
    detail::require_finite(m, "gap");
    if (std::abs(u.norm() - 1.0) > 1e-9)
        throw std::domain_error("gap: direction must be a unit 3-vector");
    return detail::gap_unchecked(m, u);
}

/// Visit both hemispheres of the unit sphere through the reference disk grid:
/// resolution^2 points spanning [-1.25, 1.25]^2, points with x^2 + y^2 > 1
/// masked out, z = +-sqrt(1 - x^2 - y^2). The callback receives
/// (x, y, hemisphere, u) in the canonical order: + hemisphere first, then -,
/// row-major in y then x.
template <class F>
inline void for_each_sphere_sample(int resolution, F&& f) {
    if (resolution < 3)
        throw std::invalid_argument("sphere sampling needs resolution >= 3");
    const double lo = -1.25, hi = 1.25;
    const double step = (hi - lo) / (resolution - 1);
    for (int hemi : {+1, -1}) {
        for (int iy = 0; iy < resolution; ++iy) {
            const double y = lo + iy * step;
            for (int ix = 0; ix < resolution; ++ix) {
                const double x = lo + ix * step;
                const double r2 = x * x + y * y;
                if (r2 > 1.0) continue;
                const double z = std::sqrt(std::max(0.0, 1.0 - r2));
                f(x, y, hemi, Eigen::Vector3d(x, y, hemi * z));
            }
        }
    }
}

/// Sampled certificate that M maps the cone into itself. Evaluates gap() on
/// the two-hemisphere grid, rounds values to round_decimals before comparing,
/// and reports the minima with deterministic argmin tie-break (first point in
/// the canonical scan order wins).
inline MuellerReport is_mueller(const Matrix4& m, int resolution = 1001,
                                const Tolerances& tol = {}) {
    detail::require_finite(m, "is_mueller");
    MuellerReport rep;
    rep.resolution = resolution;
    rep.tol = tol.zero_tol;
    rep.min_q = std::numeric_limits<double>::infinity();
    rep.min_b = std::numeric_limits<double>::infinity();
    for_each_sphere_sample(resolution, [&](double, double, int, const Eigen::Vector3d& u) {
        const GapValues g = detail::gap_unchecked(m, u);
        const double q = detail::round_decimals(g.q, tol.round_decimals);
        const double b = detail::round_decimals(g.b, tol.round_decimals);
        if (q < rep.min_q) {
            rep.min_q = q;
            rep.argmin_q = u;
        }
        if (b < rep.min_b) {
            rep.min_b = b;
            rep.argmin_b = u;
        }
        ++rep.samples;
    });
    rep.verdict = rep.min_q >= -tol.zero_tol && rep.min_b >= -tol.zero_tol;
    return rep;
}

/// Fast necessary-condition screen. Any false flag certifies M is not a
/// Mueller matrix; all-true is not sufficient.
struct NecessaryConditions {
    bool first_column_stokes = false;  // (a; v0) in the cone
    bool first_row_stokes = false;     // (a; w0) in the cone
    bool zero_a_implies_zero = false;  // a == 0 forces M == 0
    bool submatrix_norm_ok = false;    // a > 0 forces ||m/a||_2 <= 1

    bool all() const {
        return first_column_stokes && first_row_stokes && zero_a_implies_zero &&
               submatrix_norm_ok;
    }
};

inline NecessaryConditions necessary_conditions(const Matrix4& m,
                                                const Tolerances& tol = {}) {
    detail::require_finite(m, "necessary_conditions");
    const double a = m(0, 0);
    const Eigen::Vector3d v0 = m.block<3, 1>(1, 0);
    const Eigen::Vector3d w0 = m.block<1, 3>(0, 1).transpose();

    NecessaryConditions nc;
    nc.first_column_stokes = classify(StokesVector(a, v0), tol) != ConeClass::Outside;
    nc.first_row_stokes = classify(StokesVector(a, w0), tol) != ConeClass::Outside;
    nc.zero_a_implies_zero =
        std::abs(a) > tol.zero_tol || m.cwiseAbs().maxCoeff() <= tol.zero_tol;
    nc.submatrix_norm_ok =
        a <= tol.zero_tol ||
        spectral_norm(Eigen::MatrixXd(m.block<3, 3>(1, 1) / a)) <= 1.0 + tol.zero_tol;
    return nc;
}

/// Scale M so the (0,0) entry becomes 1. A cone-preserving matrix with zero
/// intensity gain is necessarily the zero matrix, which has no normalized
/// form; std::domain_error in that case.
inline Matrix4 normalize(const Matrix4& m, const Tolerances& tol = {}) {
    detail::require_finite(m, "normalize");
    const double a = m(0, 0);
    if (std::abs(a) <= tol.zero_tol)
        throw std::domain_error(
            "normalize: intensity gain is zero; only the zero matrix preserves the "
            "cone with a vanishing (0,0) entry, and it has no normalized form");
    return m / a;
}

}  // namespace muellercone

#endif  // MUELLERCONE_MUELLER_HPP
