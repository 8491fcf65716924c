#include <cmath>
#include <vector>

#include "betajac/randkit.hpp"
#include "doctest.h"

using namespace betajac;

TEST_SUITE_BEGIN("randkit");

TEST_CASE("equal (seed, stream_id) replays the same sequence") {
    RngStream a(1234, 7);
    RngStream b(1234, 7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniform() == b.uniform());
    }
    RngStream c(1234, 8);
    RngStream d(1234, 7);
    int same = 0;
    for (int i = 0; i < 1000; ++i) {
        if (c.uniform() == d.uniform()) ++same;
    }
    CHECK(same < 5);
}

TEST_CASE("gamma sampler matches its mean") {
    RngStream stream(42, 0);

    SUBCASE("shape 1 is exponential") {
        const int draws = 200000;
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) sum += sample_gamma(1.0, stream);
        const double mean = sum / draws;
        // Var = 1, so 4 sigma of the mean estimate:
        CHECK(std::abs(mean - 1.0) < 4.0 / std::sqrt(double(draws)));
    }
    SUBCASE("shape 5 over 1e6 draws") {
        const int draws = 1000000;
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) sum += sample_gamma(5.0, stream);
        const double mean = sum / draws;
        CHECK(std::abs(mean - 5.0) < 4.0 * std::sqrt(5.0 / double(draws)));
    }
    SUBCASE("fractional shape below one") {
        const int draws = 200000;
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) sum += sample_gamma(0.3, stream);
        const double mean = sum / draws;
        CHECK(std::abs(mean - 0.3) < 4.0 * std::sqrt(0.3 / double(draws)));
    }
    SUBCASE("invalid shape") {
        CHECK_THROWS_AS(sample_gamma(0.0, stream), ParamError);
        CHECK_THROWS_AS(sample_gamma(-2.0, stream), ParamError);
    }
}

TEST_CASE("beta sampler against the exact joint moments") {
    RngStream stream(7, 3);

    SUBCASE("Beta(1,1) is uniform") {
        const int draws = 100000;
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) sum += sample_beta(1.0, 1.0, stream);
        CHECK(std::abs(sum / draws - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / draws));
    }
    SUBCASE("moment match for (i,j) in {(1,0),(2,0),(1,1),(2,2)}") {
        const double p = 2.0, q = 3.0;
        const int draws = 100000;
        std::vector<double> xs(draws);
        for (int i = 0; i < draws; ++i) xs[i] = sample_beta(p, q, stream);
        const int cases[4][2] = {{1, 0}, {2, 0}, {1, 1}, {2, 2}};
        for (const auto& c : cases) {
            const int mi = c[0], mj = c[1];
            double sum = 0.0;
            for (double x : xs) sum += std::pow(x, mi) * std::pow(1.0 - x, mj);
            const double mean = sum / draws;
            const double expected = beta_joint_moment(p, q, mi, mj);
            const double second = beta_joint_moment(p, q, 2 * mi, 2 * mj);
            const double sigma = std::sqrt((second - expected * expected) / draws);
            CHECK(std::abs(mean - expected) < 4.0 * sigma);
        }
    }
    SUBCASE("draws stay strictly inside (0,1)") {
        for (int i = 0; i < 20000; ++i) {
            const double x = sample_beta(0.05, 2.0, stream);
            CHECK(x > 0.0);
            CHECK(x < 1.0);
        }
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(sample_beta(-1.0, 1.0, stream), ParamError);
        CHECK_THROWS_AS(sample_beta(1.0, 0.0, stream), ParamError);
    }
}

TEST_CASE("beta_joint_moment closed forms") {
    CHECK(beta_joint_moment(1.0, 1.0, 1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(beta_joint_moment(3.7, 0.9, 0, 0) == 1.0);
    CHECK(beta_joint_moment(2.0, 3.0, 1, 0) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_THROWS_AS(beta_joint_moment(0.0, 1.0, 1, 0), ParamError);
}

TEST_CASE("brownian paths") {
    RngStream stream(99, 1);

    SUBCASE("grid and origin") {
        const BrownianPath p = sample_brownian(1.0, 0.5, stream);
        CHECK(p.values.size() == 3);
        CHECK(p.values[0] == 0.0);
        CHECK_THROWS_AS(sample_brownian(1.0, 2.0, stream), ParamError);
        CHECK_THROWS_AS(sample_brownian(-1.0, 0.5, stream), ParamError);
    }
    SUBCASE("terminal variance") {
        const int paths = 10000;
        const double length = 2.0;
        double sum2 = 0.0;
        for (int i = 0; i < paths; ++i) {
            RngStream s(5, i);
            sum2 += std::pow(sample_brownian(length, 0.05, s).values.back(), 2);
        }
        CHECK(std::abs(sum2 / paths - length) < 0.05 * length);
    }
    SUBCASE("quadratic variation concentrates near the length") {
        const double length = 1.0;
        const double h = 1e-3;
        double qv_mean = 0.0;
        for (int i = 0; i < 100; ++i) {
            RngStream s(11, i);
            const BrownianPath p = sample_brownian(length, h, s);
            double qv = 0.0;
            for (std::size_t j = 1; j < p.values.size(); ++j) {
                qv += std::pow(p.values[j] - p.values[j - 1], 2);
            }
            qv_mean += qv;
        }
        qv_mean /= 100.0;
        CHECK(std::abs(qv_mean - length) < 0.10 * length);
    }
    SUBCASE("refinement keeps endpoints and halves the step") {
        const BrownianPath p = sample_brownian(1.0, 0.25, stream);
        const BrownianPath f = refine_brownian(p, stream);
        CHECK(f.step == doctest::Approx(0.125));
        CHECK(f.values.size() == 2 * p.values.size() - 1);
        for (std::size_t i = 0; i < p.values.size(); ++i) {
            CHECK(f.values[2 * i] == doctest::Approx(p.values[i]));
        }
        const BrownianPath e = extend_brownian(p, 2.0, stream);
        CHECK(e.values.size() == 9);
        for (std::size_t i = 0; i < p.values.size(); ++i) CHECK(e.values[i] == p.values[i]);
    }
}

TEST_SUITE_END();
