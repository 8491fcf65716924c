#include <cmath>
#include <vector>

#include "betajac/eigencore.hpp"
#include "betajac/matcore.hpp"
#include "betajac/randkit.hpp"
#include "doctest.h"

using namespace betajac;

namespace {

DenseMatrix matmul_t(const DenseMatrix& a) {
    DenseMatrix c(a.rows, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.rows; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) sum += a(i, k) * a(j, k);
            c(i, j) = sum;
        }
    }
    return c;
}

Bidiagonal random_bidiagonal(std::size_t n, RngStream& stream,
                             Bidiagonal::Orientation orient = Bidiagonal::Orientation::lower) {
    Bidiagonal b;
    b.orientation = orient;
    b.diag.resize(n);
    b.offdiag.resize(n - 1);
    for (double& v : b.diag) v = 0.3 + stream.uniform();
    for (double& v : b.offdiag) v = 2.0 * stream.uniform() - 1.0;
    return b;
}

}  // namespace

TEST_SUITE_BEGIN("matcore");

TEST_CASE("gram of tiny matrices") {
    SUBCASE("1x1") {
        Bidiagonal b{{1.0}, {}, Bidiagonal::Orientation::lower};
        const SymTridiagonal t = gram(b);
        CHECK(t.diag == std::vector<double>{1.0});
        CHECK(t.offdiag.empty());
    }
    SUBCASE("2x2 lower closed form") {
        const double a = 1.3, c = 0.7, bb = -0.4;
        Bidiagonal b{{a, c}, {bb}, Bidiagonal::Orientation::lower};
        const SymTridiagonal t = gram(b);
        CHECK(t.diag[0] == doctest::Approx(a * a));
        CHECK(t.diag[1] == doctest::Approx(c * c + bb * bb));
        CHECK(t.offdiag[0] == doctest::Approx(a * bb));
    }
}

TEST_CASE("gram matches the dense product for random matrices") {
    RngStream stream(3, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto orient = trial % 2 == 0 ? Bidiagonal::Orientation::lower
                                           : Bidiagonal::Orientation::upper;
        const Bidiagonal b = random_bidiagonal(n, stream, orient);
        const SymTridiagonal t = gram(b);
        const DenseMatrix dense = matmul_t(to_dense(b));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double expected = 0.0;
                if (i == j) expected = t.diag[i];
                else if (i + 1 == j) expected = t.offdiag[i];
                else if (j + 1 == i) expected = t.offdiag[j];
                CHECK(dense(i, j) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("doubling embeds the singular values as a symmetric spectrum") {
    SUBCASE("1x1") {
        Bidiagonal b{{1.0}, {}, Bidiagonal::Orientation::lower};
        const SymTridiagonal l = double_embedding(b);
        CHECK(l.diag == std::vector<double>{0.0, 0.0});
        CHECK(l.offdiag == std::vector<double>{1.0});
        const auto eig = dense_sym_eigen(to_dense(l));
        CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("zero matrix") {
        Bidiagonal b{{0.0, 0.0}, {0.0}, Bidiagonal::Orientation::lower};
        const auto eig = dense_sym_eigen(to_dense(double_embedding(b)));
        for (double v : eig) CHECK(std::abs(v) < 1e-14);
    }
    SUBCASE("random 4x4 against the dense gram oracle") {
        RngStream stream(17, 0);
        for (int trial = 0; trial < 25; ++trial) {
            const Bidiagonal b = random_bidiagonal(4, stream);
            const auto doubled = dense_sym_eigen(to_dense(double_embedding(b)));
            const auto gram_eig = dense_sym_eigen(matmul_t(to_dense(b)));
            // Spectrum of L is {+/- sigma_i}; sigma_i^2 are the gram eigenvalues.
            for (std::size_t i = 0; i < 4; ++i) {
                const double sigma = std::sqrt(gram_eig[3 - i]);
                CHECK(doubled[i] == doctest::Approx(-sigma).epsilon(1e-10));
                CHECK(doubled[4 + (3 - i)] == doctest::Approx(sigma).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("bidiagonal inverse") {
    SUBCASE("diagonal-only") {
        Bidiagonal b{{2.0, -4.0, 0.5}, {0.0, 0.0}, Bidiagonal::Orientation::lower};
        const DenseMatrix inv = invert_lower_bidiagonal(b);
        CHECK(inv(0, 0) == doctest::Approx(0.5));
        CHECK(inv(1, 1) == doctest::Approx(-0.25));
        CHECK(inv(2, 2) == doctest::Approx(2.0));
        CHECK(inv(1, 0) == 0.0);
    }
    SUBCASE("diagonal entries are reciprocals (empty product)") {
        RngStream stream(5, 0);
        const Bidiagonal b = random_bidiagonal(6, stream);
        const DenseMatrix inv = invert_lower_bidiagonal(b);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(inv(i, i) == doctest::Approx(1.0 / b.diag[i]).epsilon(1e-14));
        }
    }
    SUBCASE("residual B * B^-1 = I for random sizes up to 500") {
        RngStream stream(11, 0);
        for (std::size_t n : {3u, 17u, 120u, 500u}) {
            const Bidiagonal b = random_bidiagonal(n, stream);
            const DenseMatrix inv = invert_lower_bidiagonal(b);
            // Lower bidiagonal times dense lower triangular, checked row by row.
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j <= i; ++j) {
                    double sum = b.diag[i] * inv(i, j);
                    if (i > 0) sum += b.offdiag[i - 1] * inv(i - 1, j);
                    const double expected = (i == j) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(sum - expected));
                }
            }
            CHECK(worst < 1e-12);
        }
    }
    SUBCASE("zero diagonal is singular") {
        Bidiagonal b{{1.0, 0.0}, {0.3}, Bidiagonal::Orientation::lower};
        CHECK_THROWS_AS(invert_lower_bidiagonal(b), NumericError);
    }
    SUBCASE("upper orientation rejected") {
        Bidiagonal b{{1.0, 1.0}, {0.3}, Bidiagonal::Orientation::upper};
        CHECK_THROWS_AS(invert_lower_bidiagonal(b), ParamError);
    }
}

TEST_CASE("gram spectrum equals the squared doubling spectrum") {
    RngStream stream(29, 0);
    for (std::size_t n : {5u, 40u, 100u}) {
        const Bidiagonal b = random_bidiagonal(n, stream);
        const auto gram_eig = full_spectrum(gram(b), 1e-13);
        const auto doubled = full_spectrum(double_embedding(b), 1e-13);
        for (std::size_t i = 0; i < n; ++i) {
            const double sigma = doubled[2 * n - 1 - i];  // i-th largest
            CHECK(std::abs(gram_eig[n - 1 - i] - sigma * sigma) < 1e-9);
        }
    }
}

TEST_CASE("spectrum is invariant under off-diagonal sign flips") {
    RngStream stream(31, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 12;
        SymTridiagonal t;
        t.diag.resize(n);
        t.offdiag.resize(n - 1);
        for (double& v : t.diag) v = stream.normal();
        for (double& v : t.offdiag) v = stream.normal();
        SymTridiagonal flipped = t;
        for (std::size_t i = 0; i < n - 1; ++i) {
            if (stream.uniform() < 0.5) flipped.offdiag[i] = -flipped.offdiag[i];
        }
        const auto e1 = full_spectrum(t, 1e-13);
        const auto e2 = full_spectrum(flipped, 1e-13);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(e1[i] - e2[i]) < 1e-10);
    }
}

TEST_CASE("determinant identity boundary cases") {
    SUBCASE("n = 1 gives (C^2, S^2)") {
        const double c[] = {0.6}, s[] = {0.8};
        const DetIdentity id = det_identities(c, s, {}, {});
        CHECK(id.prod_lambda() == doctest::Approx(0.36).epsilon(1e-14));
        CHECK(id.prod_one_minus_lambda() == doctest::Approx(0.64).epsilon(1e-14));
    }
    SUBCASE("all alpha = 0 kills prod(1 - lambda)") {
        const double c[] = {1.0, 1.0}, s[] = {0.0, 0.0};
        const double ct[] = {0.3}, st[] = {std::sqrt(1.0 - 0.09)};
        const DetIdentity id = det_identities(c, s, ct, st);
        CHECK(id.prod_lambda() == doctest::Approx(1.0 - 0.09).epsilon(1e-14));
        CHECK(id.prod_one_minus_lambda() == 0.0);
    }
}

TEST_SUITE_END();
