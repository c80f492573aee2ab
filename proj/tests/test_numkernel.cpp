// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "muellercone/numkernel.hpp"
#include "support.hpp"

using namespace muellercone;
using Catch::Approx;

TEST_CASE("eigen_decompose on a diagonal matrix") {
    const Matrix4 a = Eigen::Vector4d(2, 1, 1, 1).asDiagonal();
    const auto pairs = eigen_decompose(a);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0].value == std::complex<double>(2.0, 0.0));
    CHECK(pairs[0].algebraic_multiplicity == 1);
    for (int i = 1; i < 4; ++i) {
        CHECK(pairs[i].value == std::complex<double>(1.0, 0.0));
        CHECK(pairs[i].algebraic_multiplicity == 3);
    }
}

TEST_CASE("eigen_decompose on a nilpotent block") {
    Matrix4 a = Matrix4::Zero();
    a(0, 1) = 1.0;
    const auto pairs = eigen_decompose(a);
    REQUIRE(pairs.size() == 4);
    for (const auto& p : pairs) {
        CHECK(std::abs(p.value) == 0.0);
        CHECK(p.algebraic_multiplicity == 4);
    }
}

TEST_CASE("eigen_decompose orders a planar rotation spectrum deterministically") {
    Matrix4 a = Matrix4::Zero();
    a(0, 1) = -1.0;
    a(1, 0) = 1.0;
    const auto pairs = eigen_decompose(a);
    // descending modulus, then real part, then imaginary part
    CHECK(std::abs(pairs[0].value - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(pairs[1].value - std::complex<double>(0, -1)) < 1e-12);
    CHECK(std::abs(pairs[2].value) < 1e-12);
    CHECK(std::abs(pairs[3].value) < 1e-12);
}

TEST_CASE("eigen_decompose properties on random matrices") {
    testsupport::Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix4 a = rng.matrix4(-10.0, 10.0);
        const double norm = spectral_norm(a);
        const auto pairs = eigen_decompose(a);
        REQUIRE(pairs.size() == 4);

        std::complex<double> sum = 0.0, prod = 1.0;
        for (const auto& p : pairs) {
            sum += p.value;
            prod *= p.value;
            // residual contract
            Eigen::Vector4cd av = a.cast<std::complex<double>>() * p.vector;
            CHECK((av - p.value * p.vector).norm() <= 1e-9 * norm);
            CHECK(p.vector.norm() == Approx(1.0).margin(1e-12));
            // conjugate partner present for complex values
            if (p.value.imag() != 0.0) {
                const bool partner =
                    std::any_of(pairs.begin(), pairs.end(), [&](const EigenPair& q) {
                        return std::abs(q.value - std::conj(p.value)) <
                               1e-9 * (1.0 + std::abs(p.value));
                    });
                CHECK(partner);
            }
        }
        CHECK(std::abs(sum.real() - a.trace()) <= 1e-7 * norm);
        CHECK(std::abs(sum.imag()) <= 1e-7 * norm);
        const double det = a.determinant();
        CHECK(std::abs(prod - std::complex<double>(det, 0.0)) <=
              1e-7 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("eigen_decompose rejects non-finite input") {
    Matrix4 a = Matrix4::Zero();
    a(2, 2) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigen_decompose(a), std::invalid_argument);
}

TEST_CASE("nullspace basic shapes") {
    const Tolerances tol;
    SECTION("zero 16x16 has a full kernel") {
        const auto basis = nullspace(Eigen::MatrixXd::Zero(16, 16), tol);
        CHECK(basis.size() == 16);
    }
    SECTION("identity 16x16 has a trivial kernel") {
        const auto basis = nullspace(Eigen::MatrixXd::Identity(16, 16), tol);
        CHECK(basis.empty());
    }
    SECTION("single zero direction") {
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(16, 16);
        a(0, 0) = 0.0;
        const auto basis = nullspace(a, tol);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0][0] == Approx(1.0).margin(1e-12));
        CHECK(basis[0].tail(15).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("nullspace vectors are orthonormal and annihilate the matrix") {
    testsupport::Rng rng(202);
    const Tolerances tol;
    for (int trial = 0; trial < 25; ++trial) {
        // rank-deficient by construction: zero out two singular directions
        Eigen::Matrix4d b = rng.matrix4(-5.0, 5.0);
        Eigen::JacobiSVD<Eigen::Matrix4d> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::Vector4d s = svd.singularValues();
        s[2] = 0.0;
        s[3] = 0.0;
        const Eigen::Matrix4d a =
            svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
        const auto basis = nullspace(a, tol);
        REQUIRE(basis.size() == 2);
        const double norm = spectral_norm(a);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK((a * basis[i]).norm() <= 10.0 * tol.zero_tol * norm);
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(std::abs(basis[i].dot(basis[j])) < 1e-10);
            CHECK(basis[i].norm() == Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("spectral_norm examples") {
    CHECK(spectral_norm(Matrix4::Identity()) == 1.0);
    Matrix4 two_e11 = Matrix4::Zero();
    two_e11(0, 0) = 2.0;
    CHECK(spectral_norm(two_e11) == 2.0);
    CHECK(spectral_norm(Matrix4(Eigen::Vector4d(1, -3, 0, 0).asDiagonal())) ==
          Approx(3.0).margin(1e-12));
}

TEST_CASE("spectral_norm properties") {
    testsupport::Rng rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix4 a = rng.matrix4(-10.0, 10.0);
        const double n = spectral_norm(a);
        CHECK(std::abs(n - spectral_norm(Eigen::MatrixXd(a.transpose()))) <= 1e-10);
        const double alpha = rng.uniform(-3.0, 3.0);
        CHECK(spectral_norm(Eigen::MatrixXd(alpha * a)) ==
              Approx(std::abs(alpha) * n).epsilon(1e-12));
    }
    CHECK(spectral_norm(Matrix4::Zero()) == 0.0);
}

TEST_CASE("spectral_norm agrees with the brute-force oracle") {
    testsupport::Rng rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix4 a = rng.matrix4(-10.0, 10.0);
        const double oracle = testsupport::brute_force_spectral_norm(a, 10000, rng);
        CHECK(spectral_norm(a) == Approx(oracle).margin(1e-6));
    }
}

TEST_CASE("eigen_degree examples") {
    const Tolerances tol;
    CHECK(eigen_degree(Matrix4::Identity(), 1.0, tol) == 1);

    Matrix4 jordan = Matrix4::Zero();
    jordan(0, 0) = 1.0;
    jordan(0, 1) = 1.0;
    jordan(1, 1) = 1.0;
    CHECK(eigen_degree(jordan, 1.0, tol) == 2);

    CHECK(eigen_degree(Matrix4(Eigen::Vector4d(2, 1, 1, 1).asDiagonal()), 1.0, tol) == 1);

    Matrix4 nilpotent = Matrix4::Zero();
    nilpotent(0, 1) = 1.0;
    nilpotent(1, 2) = 1.0;
    nilpotent(2, 3) = 1.0;
    CHECK(eigen_degree(nilpotent, 0.0, tol) == 4);
}

TEST_CASE("eigen_degree rejects a non-eigenvalue") {
    CHECK_THROWS_AS(eigen_degree(Matrix4::Identity(), 3.0, Tolerances{}),
                    std::domain_error);
}
