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

#ifndef MUELLERCONE_CONESPEC_HPP
#define MUELLERCONE_CONESPEC_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "muellercone/mueller.hpp"
#include "muellercone/numkernel.hpp"
#include "muellercone/stokes.hpp"

namespace muellercone {

/// Spectral diagnostics of a matrix relative to the light cone.
///
/// rho_is_eigenvalue and degree_condition are the two necessary conditions
/// for invariance of *some* solid cone; when either fails the matrix leaves
/// no solid cone invariant (degree_condition is reported false whenever rho
/// is not an eigenvalue, since the degree of rho is then undefined).
/// perron_vector is a cone-preferred unit eigenvector of the dominant
/// eigenvalue, sign-normalized so its intensity component is nonnegative.
/// unique_K_eigenvector states that the dominant eigenvector meets the cone
/// and no other eigenvalue contributes a real eigenvector inside it.
struct SpectralReport {
    double rho = 0.0;
    bool rho_is_eigenvalue = false;
    bool rho_simple = false;
    std::vector<std::complex<double>> peripheral_eigenvalues;
    bool peripheral_all_simple = false;
    std::optional<Vector4> perron_vector;
    std::optional<ConeClass> perron_in_K;
    bool unique_K_eigenvector = false;
    bool degree_condition = false;
};

/// Renormalized orbit A^m w / rho^m with its convergence status.
struct PowerIterationTrace {
    std::vector<Vector4> iterates;
    bool converged = false;
    std::optional<Vector4> limit;
    std::optional<double> lambda_w;
};

/// Maximum modulus over the spectrum; 0 for nilpotent matrices. Not
/// necessarily an eigenvalue itself.
inline double spectral_radius(const Matrix4& a) {
    double rho = 0.0;
    for (const auto& p : eigen_decompose(a)) rho = std::max(rho, std::abs(p.value));
    return rho;
}

namespace detail {

/// Does span(basis) meet the cone in a nonzero vector? With B orthonormal,
/// the restricted form is S = B^T G B and the subspace meets the cone exactly
/// when lambda_max(S) >= 0: the maximizing direction has q_G >= 0 and one of
/// its signs has nonnegative intensity. Returns the witness when it exists.
inline std::optional<Vector4> cone_intersection_witness(
    const std::vector<Eigen::VectorXd>& basis, const Tolerances& tol) {
    if (basis.empty()) return std::nullopt;
    const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd b(4, k);
    for (Eigen::Index j = 0; j < k; ++j) b.col(j) = basis[static_cast<std::size_t>(j)];
    Eigen::Matrix4d g = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(b.transpose() * g * b);
    const Eigen::Index top = s.eigenvalues().size() - 1;
    if (s.eigenvalues()[top] < -tol.zero_tol) return std::nullopt;
    Vector4 w = b * s.eigenvectors().col(top);
    if (w[0] < 0.0) w = -w;
    w.normalize();
    return w;
}

inline int cone_class_rank(ConeClass c) {
    switch (c) {
        case ConeClass::Interior: return 2;
        case ConeClass::Boundary: return 1;
        default: return 0;
    }
}

}  // namespace detail

/// Necessary spectral conditions for cone invariance plus the dominant
/// eigenvector's position relative to the light cone.
inline SpectralReport birkhoff_report(const Matrix4& a, const Tolerances& tol = {}) {
    detail::require_finite(a, "birkhoff_report");
    const auto pairs = eigen_decompose(a, tol);
    const auto clusters = distinct_eigenvalues(pairs, tol);

    SpectralReport rep;
    for (const auto& c : clusters) rep.rho = std::max(rep.rho, std::abs(c.value));
    const double scale = 1.0 + rep.rho;

    const EigenCluster* rho_cluster = nullptr;
    for (const auto& c : clusters) {
        if (std::abs(c.value.imag()) == 0.0 && c.value.real() >= -tol.zero_tol &&
            std::abs(c.value.real() - rep.rho) <= tol.zero_tol * scale) {
            rho_cluster = &c;
            break;
        }
    }
    rep.rho_is_eigenvalue = rho_cluster != nullptr;
    rep.rho_simple = rho_cluster && rho_cluster->multiplicity == 1;

    for (const auto& c : clusters)
        if (std::abs(std::abs(c.value) - rep.rho) <= tol.zero_tol * scale)
            rep.peripheral_eigenvalues.push_back(c.value);
    rep.peripheral_all_simple = true;
    for (const auto& c : clusters)
        if (std::abs(std::abs(c.value) - rep.rho) <= tol.zero_tol * scale &&
            c.multiplicity != 1)
            rep.peripheral_all_simple = false;

    if (rho_cluster) {
        const int deg_rho = eigen_degree(a, rho_cluster->value, tol);
        rep.degree_condition = true;
        for (const auto& lam : rep.peripheral_eigenvalues)
            if (eigen_degree(a, lam, tol) > deg_rho) rep.degree_condition = false;
    }

    // Dominant eigenvector, preferring candidates deepest inside the cone:
    // each geometric eigenvector with both signs, plus the subspace witness
    // when the eigenspace has dimension >= 2.
    bool rho_vector_in_cone = false;
    if (rho_cluster) {
        const Matrix4 shifted = a - rho_cluster->value.real() * Matrix4::Identity();
        const auto basis = nullspace(shifted, tol);
        std::vector<Vector4> candidates;
        for (const auto& v : basis) {
            candidates.emplace_back(v);
            candidates.emplace_back(-v);
        }
        if (basis.size() >= 2)
            if (auto w = detail::cone_intersection_witness(basis, tol)) candidates.push_back(*w);

        int best_rank = -1;
        for (const auto& cand : candidates) {
            const ConeClass c = classify(StokesVector::from_vector(cand), tol);
            if (detail::cone_class_rank(c) > best_rank) {
                best_rank = detail::cone_class_rank(c);
                Vector4 v = cand;
                if (v[0] < 0.0) v = -v;
                rep.perron_vector = v;
                rep.perron_in_K = classify(StokesVector::from_vector(v), tol);
            }
        }
        rho_vector_in_cone = rep.perron_in_K && *rep.perron_in_K != ConeClass::Outside;
    }

    // Uniqueness over the remaining real eigenvalues: none of their geometric
    // eigenspaces may meet the cone in a nonzero vector.
    bool others_clear = true;
    for (const auto& c : clusters) {
        if (std::abs(c.value.imag()) != 0.0) continue;
        if (rho_cluster && std::abs(c.value - rho_cluster->value) <=
                               tol.zero_tol * (1.0 + std::abs(c.value)))
            continue;
        const Matrix4 shifted = a - c.value.real() * Matrix4::Identity();
        const auto basis = nullspace(shifted, tol);
        if (detail::cone_intersection_witness(basis, tol)) others_clear = false;
    }
    rep.unique_K_eigenvector = rho_vector_in_cone && others_clear;
    return rep;
}

namespace detail {

inline void require_certified_nonzero(const Matrix4& a, int resolution,
                                      const Tolerances& tol, const char* what) {
    require_finite(a, what);
    if (a.cwiseAbs().maxCoeff() <= tol.zero_tol)
        throw std::domain_error(std::string(what) + ": the zero matrix is excluded");
    if (!is_mueller(a, resolution, tol).verdict)
        throw std::domain_error(std::string(what) +
                                ": input must pass the Mueller certificate first");
}

}  // namespace detail

/// Spectral test for cone irreducibility: the dominant eigenvalue is simple,
/// every peripheral eigenvalue is simple, and the dominant eigenvector is the
/// unique eigenvector in the cone and lies strictly in its interior (a matrix
/// fixing a boundary ray fixes a face, so a boundary dominant eigenvector
/// already refutes irreducibility).
///
/// Preconditions: A != 0 and A passes the Mueller certificate at the given
/// resolution (std::domain_error otherwise).
inline std::pair<bool, SpectralReport> is_K_irreducible(const Matrix4& a,
                                                        int resolution = 1001,
                                                        const Tolerances& tol = {}) {
    detail::require_certified_nonzero(a, resolution, tol, "is_K_irreducible");
    SpectralReport rep = birkhoff_report(a, tol);
    const bool ok = rep.rho_simple && rep.peripheral_all_simple &&
                    rep.unique_K_eigenvector &&
                    rep.perron_in_K == std::optional<ConeClass>(ConeClass::Interior);
    return {ok, std::move(rep)};
}

/// Irreducible with the dominant eigenvalue alone on its circle.
inline std::pair<bool, SpectralReport> is_K_primitive(const Matrix4& a,
                                                      int resolution = 1001,
                                                      const Tolerances& tol = {}) {
    auto [irr, rep] = is_K_irreducible(a, resolution, tol);
    const bool ok = irr && rep.peripheral_eigenvalues.size() == 1;
    return {ok, std::move(rep)};
}

/// Renormalized power iteration x_{m+1} = A x_m / rho from a nonzero cone
/// seed. Convergence requires three consecutive steps moving less than
/// conv_tol in the 2-norm, capped at m_max. When converged, the limit is the
/// last iterate and lambda_w its norm (the limit is lambda_w times the unit
/// dominant eigenvector).
///
/// Throws std::domain_error when rho is (numerically) zero or the seed is
/// outside the cone or zero.
inline PowerIterationTrace power_iteration(const Matrix4& a, const StokesVector& w,
                                           int m_max = 10000, double conv_tol = 1e-10,
                                           const Tolerances& tol = {}) {
    detail::require_finite(a, "power_iteration");
    const double rho = spectral_radius(a);
    if (rho <= tol.zero_tol)
        throw std::domain_error("power_iteration: spectral radius is zero, nothing to renormalize by");
    if (classify(w, tol) == ConeClass::Outside)
        throw std::domain_error("power_iteration: seed must lie in the cone");
    if (w.to_vector().norm() <= tol.zero_tol)
        throw std::domain_error("power_iteration: seed must be nonzero");

    PowerIterationTrace trace;
    Vector4 x = w.to_vector();
    trace.iterates.push_back(x);
    int consecutive = 0;
    for (int m = 1; m <= m_max; ++m) {
        const Vector4 next = (a * x) / rho;
        trace.iterates.push_back(next);
        consecutive = (next - x).norm() < conv_tol ? consecutive + 1 : 0;
        x = next;
        if (consecutive >= 3) {
            trace.converged = true;
            break;
        }
    }
    if (trace.converged) {
        trace.limit = trace.iterates.back();
        const double scale = trace.limit->norm();
        if (scale > tol.zero_tol) trace.lambda_w = scale;
    }
    return trace;
}

}  // namespace muellercone

#endif  // MUELLERCONE_CONESPEC_HPP
