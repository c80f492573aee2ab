// SPDX-License-Identifier: Apache-2.0
//
// Shared test utilities: a deterministic RNG and the independent oracles the
// suites check the library against. Everything here stays independent of the
// implementation paths it is used to verify.

#ifndef MUELLERCONE_TESTS_SUPPORT_HPP
#define MUELLERCONE_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "muellercone/muellercone.hpp"

namespace testsupport {

// Deterministic 64-bit generator so every suite run sees the same samples.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian() {
        // Box-Muller; one value per call keeps the stream simple.
        double u1 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    muellercone::Matrix4 matrix4(double lo, double hi) {
        muellercone::Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = uniform(lo, hi);
        return m;
    }

    muellercone::Vector4 unit4() {
        muellercone::Vector4 v;
        do {
            for (int i = 0; i < 4; ++i) v[i] = gaussian();
        } while (v.norm() < 1e-6);
        return v.normalized();
    }

    // A vector guaranteed inside the cone: intensity in (0, 2], polarization
    // radius a fraction of the intensity.
    muellercone::StokesVector in_cone() {
        const double a = uniform(1e-3, 2.0);
        const double r = uniform(0.0, 1.0) * a;
        Eigen::Vector3d dir;
        do {
            for (int i = 0; i < 3; ++i) dir[i] = gaussian();
        } while (dir.norm() < 1e-6);
        return muellercone::StokesVector(a, (r * dir.normalized()).eval());
    }

  private:
    std::uint64_t state_;
};

// Independent spectral-norm oracle: maximize ||A v|| over unit vectors by a
// quasi-uniform global sample followed by a shrinking local grid search. No
// eigenvalue machinery involved.
inline double brute_force_spectral_norm(const muellercone::Matrix4& a,
                                        int global_samples, Rng& rng) {
    muellercone::Vector4 best_v = muellercone::Vector4::UnitX();
    double best = (a * best_v).norm();
    for (int s = 0; s < global_samples; ++s) {
        const muellercone::Vector4 v = rng.unit4();
        const double value = (a * v).norm();
        if (value > best) {
            best = value;
            best_v = v;
        }
    }
    double step = 0.05;
    while (step > 1e-9) {
        bool improved = false;
        for (int i = 0; i < 4; ++i)
            for (double sgn : {1.0, -1.0}) {
                muellercone::Vector4 v = best_v;
                v[i] += sgn * step;
                v.normalize();
                const double value = (a * v).norm();
                if (value > best) {
                    best = value;
                    best_v = v;
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
    }
    return best;
}

// Direct-definition cone classifier: a >= 0 and a^2 >= |v|^2, same tolerance
// semantics as classify() but computed along the norm route.
inline muellercone::ConeClass classify_by_definition(const muellercone::StokesVector& s,
                                                     const muellercone::Tolerances& tol) {
    const double q = s.a * s.a - (s.v[0] * s.v[0] + s.v[1] * s.v[1] + s.v[2] * s.v[2]);
    if (s.a < -tol.zero_tol || q < -tol.zero_tol) return muellercone::ConeClass::Outside;
    if (std::abs(q) <= tol.zero_tol) return muellercone::ConeClass::Boundary;
    return muellercone::ConeClass::Interior;
}

// The six boundary rays (1; +-e_i) used as power-iteration seeds.
inline std::array<muellercone::StokesVector, 6> boundary_seeds() {
    std::array<muellercone::StokesVector, 6> seeds;
    int k = 0;
    for (int i = 0; i < 3; ++i)
        for (double sgn : {1.0, -1.0}) {
            Eigen::Vector3d e = Eigen::Vector3d::Zero();
            e[i] = sgn;
            seeds[k++] = muellercone::StokesVector(1.0, e);
        }
    return seeds;
}

// Random invertible matrix with a condition-number cap, for the calibration
// round trips.
inline muellercone::Matrix4 random_conditioned_invertible(Rng& rng, double max_cond) {
    while (true) {
        const muellercone::Matrix4 w = rng.matrix4(-1.0, 1.0);
        Eigen::JacobiSVD<Eigen::Matrix4d> svd(w);
        const double smin = svd.singularValues()[3];
        const double smax = svd.singularValues()[0];
        if (smin > 1e-12 && smax / smin < max_cond && std::abs(w.determinant()) > 1e-3)
            return w;
    }
}

// Sorted eigenvalue lists match within tol (used for similarity checks).
inline bool spectra_match(const muellercone::Matrix4& a, const muellercone::Matrix4& b,
                          double tol) {
    const auto ea = muellercone::eigen_decompose(a);
    const auto eb = muellercone::eigen_decompose(b);
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (std::abs(ea[i].value - eb[i].value) > tol * (1.0 + std::abs(ea[i].value)))
            return false;
    return true;
}

}  // namespace testsupport

#endif  // MUELLERCONE_TESTS_SUPPORT_HPP
