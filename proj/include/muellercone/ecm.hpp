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

#ifndef MUELLERCONE_ECM_HPP
#define MUELLERCONE_ECM_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "muellercone/approx.hpp"
#include "muellercone/mueller.hpp"
#include "muellercone/numkernel.hpp"

namespace muellercone {

/// How the calibration matrix W was obtained.
enum class WProvenance {
    KernelInvertible,     // invertible element of the kernel of H
    KernelFirst,          // kernel nonempty but no invertible element found
    RealEigSmallest,      // eigenvector of the real eigenvalue of smallest modulus
    SymmetrizedSmallest,  // eigenvector of H^T H for its smallest eigenvalue
};

inline const char* to_string(WProvenance p) {
    switch (p) {
        case WProvenance::KernelInvertible: return "KernelInvertible";
        case WProvenance::KernelFirst: return "KernelFirst";
        case WProvenance::RealEigSmallest: return "RealEigSmallest";
        default: return "SymmetrizedSmallest";
    }
}

struct WSelection {
    Matrix4 W = Matrix4::Zero();
    WProvenance provenance = WProvenance::KernelFirst;
    std::optional<double> eigenvalue_used;
};

struct CalibrationInput {
    Matrix4 M = Matrix4::Identity();
    Matrix4 aw = Matrix4::Identity();
    Matrix4 amw = Matrix4::Identity();
};

struct CalibrationResult {
    Matrix16 H = Matrix16::Zero();
    WSelection selection;
    Matrix4 new_M_raw = Matrix4::Zero();
    Matrix4 new_M_final = Matrix4::Zero();
    MuellerReport mueller_report;
    std::vector<std::string> diagnostics;
};

/// Row-major vectorization: vec(X)[4i+j] = X(i,j).
inline Vector16 vec_row_major(const Matrix4& x) {
    Vector16 v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[4 * i + j] = x(i, j);
    return v;
}

inline Matrix4 unvec_row_major(const Eigen::VectorXd& v) {
    if (v.size() != 16)
        throw std::invalid_argument("unvec_row_major: expected a 16-vector");
    Matrix4 x;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x(i, j) = v[4 * i + j];
    return x;
}

/// Matrix of the linear map X -> M X - X B over the canonical basis E_ij,
/// with row-major vectorization on both sides: column 4i+j is the image of
/// E_ij, row 4x+y holds entry (x,y) of that image.
inline Matrix16 build_H(const Matrix4& m, const Matrix4& aw_inv_amw) {
    detail::require_finite(m, "build_H");
    detail::require_finite(aw_inv_amw, "build_H");
    Matrix16 h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Matrix4 e = Matrix4::Zero();
            e(i, j) = 1.0;
            h.col(4 * i + j) = vec_row_major(m * e - e * aw_inv_amw);
        }
    return h;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline double uniform_pm1(std::uint64_t& state) {
    return 2.0 * (static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
}

inline void note(std::vector<std::string>* diag, const std::string& line) {
    if (diag) diag->push_back(line);
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace detail

/// Pick the calibration matrix W from the structure of H.
///
/// Kernel route first: scan the nullspace basis in its deterministic order
/// and take the first vector whose 4x4 reshape is invertible. The basis the
/// SVD produces for these kernels is often structurally singular even though
/// the subspace contains invertible matrices, so when the plain scan fails
/// and the kernel is a proper subspace, a fixed-seed family of unit
/// combinations of the basis is searched and the largest-determinant
/// invertible one wins (still an exact kernel element). If nothing invertible
/// turns up, the first basis vector is kept. With a trivial kernel, the real
/// eigenvalue of smallest modulus supplies the eigenvector; failing that the
/// smallest eigenvalue of H^T H does. The result always passes through
/// make_invertible before being returned.
inline WSelection select_W(const Matrix16& h, const Tolerances& tol = {},
                           std::vector<std::string>* diagnostics = nullptr) {
    detail::require_finite(h, "select_W");
    const auto kernel = nullspace(h, tol);

    if (!kernel.empty()) {
        detail::note(diagnostics, "kernel of H is nontrivial (dimension " +
                                      std::to_string(kernel.size()) + ")");
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            const Matrix4 w = unvec_row_major(kernel[i]);
            if (std::abs(w.determinant()) > tol.zero_tol) {
                detail::note(diagnostics, "kernel basis vector " + std::to_string(i) +
                                              " is invertible; selected");
                return {make_invertible(w, tol).output, WProvenance::KernelInvertible,
                        std::nullopt};
            }
        }
        if (kernel.size() >= 2 && kernel.size() <= 15) {
            std::uint64_t state = 0x6d75636f6e653031ull;
            double best_det = tol.zero_tol;
            std::optional<Matrix4> best;
            for (int trial = 0; trial < 64; ++trial) {
                Eigen::VectorXd combo = Eigen::VectorXd::Zero(16);
                for (const auto& b : kernel) combo += detail::uniform_pm1(state) * b;
                const double norm = combo.norm();
                if (norm == 0.0) continue;
                combo /= norm;
                const Matrix4 w = unvec_row_major(combo);
                const double d = std::abs(w.determinant());
                if (d > best_det) {
                    best_det = d;
                    best = w;
                }
            }
            if (best) {
                detail::note(diagnostics,
                             "no invertible basis vector; selected an invertible kernel "
                             "combination (|det| = " +
                                 detail::fmt(best_det) + ")");
                return {make_invertible(*best, tol).output, WProvenance::KernelInvertible,
                        std::nullopt};
            }
        }
        detail::note(diagnostics,
                     "no invertible matrix found in the kernel; keeping the first basis "
                     "vector and repairing it");
        return {make_invertible(unvec_row_major(kernel[0]), tol).output,
                WProvenance::KernelFirst, std::nullopt};
    }

    detail::note(diagnostics, "kernel of H is trivial");
    const auto pairs = eigen_decompose(h, tol);
    const EigenPair* best_real = nullptr;
    for (const auto& p : pairs) {
        if (p.value.imag() != 0.0) continue;
        if (!best_real || std::abs(p.value) < std::abs(best_real->value)) best_real = &p;
    }
    if (best_real) {
        Eigen::VectorXd v = best_real->vector.real();
        if (v.norm() < 1e-3) v = best_real->vector.imag();
        v.normalize();
        detail::note(diagnostics, "selected the eigenvector of the real eigenvalue of "
                                  "smallest modulus, " +
                                      detail::fmt(best_real->value.real()));
        return {make_invertible(unvec_row_major(v), tol).output,
                WProvenance::RealEigSmallest, best_real->value.real()};
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sym(Eigen::MatrixXd(h.transpose() * h));
    Eigen::VectorXd v = sym.eigenvectors().col(0);
    detail::note(diagnostics,
                 "no real eigenvalues; selected the eigenvector of H^T H for its "
                 "smallest eigenvalue, " +
                     detail::fmt(sym.eigenvalues()[0]));
    return {make_invertible(unvec_row_major(v), tol).output,
            WProvenance::SymmetrizedSmallest, sym.eigenvalues()[0]};
}

/// Full calibration pipeline:
///   1. repair aw to an invertible matrix,
///   2. assemble H for X -> M X - X (aw^-1 amw),
///   3. select W,
///   4. conjugate: raw = W (aw^-1 amw) W^-1, rounded to 8 decimals,
///   5. final repair to an invertible Mueller matrix.
/// Every branch taken is recorded in diagnostics.
inline CalibrationResult calibrate(const CalibrationInput& input, int resolution = 1001,
                                   const Tolerances& tol = {}) {
    detail::require_finite(input.M, "calibrate");
    detail::require_finite(input.aw, "calibrate");
    detail::require_finite(input.amw, "calibrate");

    CalibrationResult result;

    const ApproxResult aw_fix = make_invertible(input.aw, tol);
    if (aw_fix.changed)
        result.diagnostics.push_back("aw was singular; shifted by epsilon = " +
                                     detail::fmt(aw_fix.epsilon_used));
    else
        result.diagnostics.push_back("aw is invertible (det = " +
                                     detail::fmt(aw_fix.output.determinant()) + ")");

    const Matrix4 b = aw_fix.output.inverse() * input.amw;
    result.H = build_H(input.M, b);
    result.selection = select_W(result.H, tol, &result.diagnostics);

    Matrix4 raw = result.selection.W * b * result.selection.W.inverse();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) raw(i, j) = detail::round_decimals(raw(i, j), 8);
    result.new_M_raw = raw;
    result.diagnostics.push_back("conjugated matrix rounded to 8 decimals");

    const ApproxResult fin = approx_invertible_mueller(raw, resolution, tol);
    result.new_M_final = fin.output;
    result.diagnostics.push_back(
        fin.changed ? "final matrix required the invertible-Mueller repair"
                    : "conjugated matrix already invertible Mueller; returned unchanged");

    result.mueller_report = is_mueller(result.new_M_final, resolution, tol);
    return result;
}

}  // namespace muellercone

#endif  // MUELLERCONE_ECM_HPP
