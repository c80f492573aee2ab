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

#ifndef MUELLERCONE_NUMKERNEL_HPP
#define MUELLERCONE_NUMKERNEL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace muellercone {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;
using Matrix16 = Eigen::Matrix<double, 16, 16>;
using Vector16 = Eigen::Matrix<double, 16, 1>;

/// Shared numeric thresholds. zero_tol is the absolute scale below which a
/// quantity counts as zero; round_decimals is the decimal rounding applied to
/// grid-sampled certificate values before comparison.
struct Tolerances {
    double zero_tol = 1e-9;
    int round_decimals = 12;
};

/// One eigenvalue of a real matrix together with a unit eigenvector and the
/// size of its eigenvalue cluster (algebraic multiplicity under zero_tol).
///
/// The eigenvector has unit 2-norm and is sign-canonicalized: the first
/// significant component has nonnegative real part (and nonnegative imaginary
/// part when the real part vanishes). Residual contract:
/// ||A v - lambda v|| <= 1e-9 * ||A||_2.
struct EigenPair {
    std::complex<double> value;
    Eigen::VectorXcd vector;
    int algebraic_multiplicity = 1;
};

namespace detail {

inline void require_finite(const Eigen::Ref<const Eigen::MatrixXd>& a, const char* what) {
    if (!a.allFinite())
        throw std::invalid_argument(std::string(what) + ": input has non-finite entries");
}

/// Round to `decimals` decimal digits, ties to even (matches the default FP
/// rounding mode).
inline double round_decimals(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::nearbyint(v * scale) / scale;
}

inline bool eig_order_before(const std::complex<double>& a, const std::complex<double>& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

inline void canonicalize_sign(Eigen::VectorXcd& v) {
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak == 0.0) return;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12 * peak) {
            if (v[i].real() < 0.0 || (v[i].real() == 0.0 && v[i].imag() < 0.0)) v = -v;
            return;
        }
    }
}

}  // namespace detail

/// Full eigendecomposition of a square real matrix (intended sizes 4 and 16).
///
/// Returns exactly n pairs counted with algebraic multiplicity, in a
/// deterministic total order: descending modulus, then descending real part,
/// then descending imaginary part. Eigenvalues with |Im| <= zero_tol*(1+|l|)
/// have the imaginary part dropped; complex values of real matrices come in
/// conjugate pairs. Multiplicities are cluster sizes under the same scaled
/// tolerance.
///
/// Throws std::invalid_argument on non-finite input and std::runtime_error if
/// the QR iteration does not converge.
inline std::vector<EigenPair> eigen_decompose(const Eigen::MatrixXd& a,
                                              const Tolerances& tol = {}) {
    detail::require_finite(a, "eigen_decompose");
    if (a.rows() != a.cols())
        throw std::invalid_argument("eigen_decompose: matrix must be square");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error(
            "eigen_decompose: QR iteration failed to converge within the solver's "
            "iteration budget");

    const Eigen::Index n = a.rows();
    std::vector<EigenPair> pairs(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        std::complex<double> lam = solver.eigenvalues()[i];
        if (std::abs(lam.imag()) <= tol.zero_tol * (1.0 + std::abs(lam)))
            lam = std::complex<double>(lam.real(), 0.0);
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        v.normalize();
        detail::canonicalize_sign(v);
        pairs[static_cast<std::size_t>(i)] = EigenPair{lam, v, 1};
    }

    std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& x, const EigenPair& y) {
        return detail::eig_order_before(x.value, y.value);
    });

    // Cluster equal eigenvalues (union-find over all pairs) to assign
    // algebraic multiplicities.
    const std::size_t m = pairs.size();
    std::vector<std::size_t> root(m);
    for (std::size_t i = 0; i < m; ++i) root[i] = i;
    auto find = [&](std::size_t i) {
        while (root[i] != i) i = root[i] = root[root[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double gap = std::abs(pairs[i].value - pairs[j].value);
            const double scale = 1.0 + std::max(std::abs(pairs[i].value), std::abs(pairs[j].value));
            if (gap <= tol.zero_tol * scale) root[find(i)] = find(j);
        }
    std::vector<int> count(m, 0);
    for (std::size_t i = 0; i < m; ++i) ++count[find(i)];
    for (std::size_t i = 0; i < m; ++i) pairs[i].algebraic_multiplicity = count[find(i)];
    return pairs;
}

/// A distinct eigenvalue cluster: representative value plus multiplicity.
struct EigenCluster {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Collapse the eigen_decompose output to distinct clusters, preserving the
/// deterministic order.
inline std::vector<EigenCluster> distinct_eigenvalues(const std::vector<EigenPair>& pairs,
                                                      const Tolerances& tol = {}) {
    std::vector<EigenCluster> out;
    for (const auto& p : pairs) {
        bool matched = false;
        for (auto& c : out) {
            const double scale = 1.0 + std::max(std::abs(c.value), std::abs(p.value));
            if (std::abs(c.value - p.value) <= tol.zero_tol * scale) {
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back({p.value, p.algebraic_multiplicity});
    }
    return out;
}

/// Spectral norm ||A||_2 = sqrt(lambda_max(A^T A)).
inline double spectral_norm(const Eigen::MatrixXd& a) {
    detail::require_finite(a, "spectral_norm");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(a.transpose() * a,
                                                     Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, s.eigenvalues().maxCoeff()));
}

/// Orthonormal basis of the numeric kernel {x : ||A x|| <= zero_tol*||A||_2}.
///
/// Right singular vectors whose singular value falls under the threshold,
/// ordered by the index of their dominant component and sign-fixed so the
/// dominant component is positive. Empty when the kernel is trivial.
inline std::vector<Eigen::VectorXd> nullspace(const Eigen::MatrixXd& a,
                                              const Tolerances& tol = {}) {
    detail::require_finite(a, "nullspace");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;

    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
        const double s = i < sv.size() ? sv[i] : 0.0;
        if (s <= tol.zero_tol * smax) basis.push_back(svd.matrixV().col(i));
    }
    auto dominant = [](const Eigen::VectorXd& v) {
        Eigen::Index idx = 0;
        v.cwiseAbs().maxCoeff(&idx);
        return idx;
    };
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
                         return dominant(x) < dominant(y);
                     });
    for (auto& v : basis)
        if (v[dominant(v)] < 0.0) v = -v;
    return basis;
}

namespace detail {

inline Eigen::Index numeric_rank(const Eigen::MatrixXcd& a, double ztol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double thr = ztol * sv[0];
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > thr) ++r;
    return r;
}

}  // namespace detail

/// Size of the largest Jordan block of `lambda`: the smallest k with
/// rank((A - lambda I)^k) == rank((A - lambda I)^(k+1)), numeric rank by
/// singular-value thresholding.
///
/// Throws std::domain_error when lambda is not an eigenvalue of A.
inline int eigen_degree(const Matrix4& a, std::complex<double> lambda,
                        const Tolerances& tol = {}) {
    detail::require_finite(a, "eigen_degree");
    const auto pairs = eigen_decompose(a, tol);
    const double scale = 1.0 + std::abs(lambda);
    const bool present = std::any_of(pairs.begin(), pairs.end(), [&](const EigenPair& p) {
        return std::abs(p.value - lambda) <= 1e-6 * scale;
    });
    if (!present)
        throw std::domain_error("eigen_degree: the given scalar is not an eigenvalue");

    Eigen::Matrix4cd b = a.cast<std::complex<double>>();
    b -= lambda * Eigen::Matrix4cd::Identity();

    Eigen::Matrix4cd power = b;
    Eigen::Index prev = detail::numeric_rank(power, tol.zero_tol);
    for (int k = 1; k <= 4; ++k) {
        power = power * b;
        const Eigen::Index next = detail::numeric_rank(power, tol.zero_tol);
        if (next == prev) return k;
        prev = next;
    }
    return 4;
}

}  // namespace muellercone

#endif  // MUELLERCONE_NUMKERNEL_HPP
