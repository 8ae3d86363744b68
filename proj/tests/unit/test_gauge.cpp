#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "comono/errors.hpp"
#include "comono/gauge.hpp"
#include "support.hpp"

using namespace comono;

TEST_CASE("gauge at known points") {
    CHECK(gauge({0, 0}) == 0.0);
    CHECK(gauge({4, 4}) == 1.0);
    CHECK(gauge({8, 8}) == 2.0);
    CHECK(gauge({0, 1}) == 1.0);
    // All four vertices of the unit ball.
    for (Point2 v : {Point2{-4, -4}, Point2{-4, -2}, Point2{4, 2}, Point2{4, 4}}) CHECK(gauge(v) == 1.0);
}

TEST_CASE("oracle agrees at the same points") {
    CHECK(gauge_oracle({4, 4}, 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gauge_oracle({-4, -2}, 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gauge_oracle({8, 8}, 1e-9) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(gauge_oracle({0, 1}, 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gauge_oracle({0, 0}, 1e-9) == 0.0);
}

TEST_CASE("invalid input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(gauge({nan, 0}), InvalidInput);
    CHECK_THROWS_AS(gauge({0, inf}), InvalidInput);
    CHECK_THROWS_AS(gauge_oracle({1, 1}, 0.0), InvalidInput);
    CHECK_THROWS_AS(gauge_oracle({1, 1}, -1.0), InvalidInput);
    CHECK_THROWS_AS(StageIndex(0), InvalidInput);
    CHECK_THROWS_AS(StageIndex(kMaxStage + 1), InvalidInput);
    CHECK_THROWS_AS(scale_index(-1.0), InvalidInput);
    CHECK_THROWS_AS(scale_index(inf), InvalidInput);
    CHECK_THROWS_AS(scale_index(std::nextafter(kMaxGauge, inf)), InvalidInput);
}

TEST_CASE("scale_index") {
    CHECK(scale_index(0.0).value() == 1);
    CHECK(scale_index(0.5).value() == 1);
    CHECK(scale_index(1.0).value() == 1);
    CHECK(scale_index(2.0).value() == 2);
    CHECK(scale_index(2.0001).value() == 3);
    CHECK(scale_index(kMaxGauge).value() == kMaxStage);

    SUBCASE("exact at every power of two and just above it") {
        for (int k = 0; k < kMaxStage; ++k) {
            const double r = std::ldexp(1.0, k);
            CAPTURE(k);
            CHECK(scale_index(r).value() == k + 1);
            if (k + 1 < kMaxStage) CHECK(scale_index(std::nextafter(r, 2 * r)).value() == k + 2);
        }
    }
    SUBCASE("smallest n with r <= 2^(n-1), brute force") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> logr(-5.0, 60.0);
        for (int i = 0; i < 10000; ++i) {
            const double r = std::exp2(logr(rng));
            int n = 1;
            while (r > std::ldexp(1.0, n - 1)) ++n;
            CHECK(scale_index(r).value() == n);
        }
    }
}

TEST_CASE("norm axioms on random points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> scale(1e-6, 1e6);
    for (int i = 0; i < 20000; ++i) {
        const Point2 p = testing::uniform_point(rng, 1e6);
        const Point2 q = testing::uniform_point(rng, 1e6);
        const double s = scale(rng);
        const double gp = gauge(p);
        const double gq = gauge(q);
        CHECK(gauge(-p) == gp);
        CHECK(std::fabs(gauge(p * s) - s * gp) <= 1e-12 * s * gp);
        CHECK(gauge(p + q) <= gp + gq + 1e-12 * (gp + gq));
        CHECK(gp > 0.0);
    }
}

TEST_CASE("closed form matches the hull oracle") {
    std::mt19937_64 rng(13);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Point2 p = testing::uniform_point(rng, 1e6);
        const double g = gauge(p);
        worst = std::fmax(worst, std::fabs(g - gauge_oracle(p, 1e-10)) / std::fmax(1.0, g));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("parallelogram membership nests") {
    CHECK(in_parallelogram({4, 4}, StageIndex(1)));
    CHECK_FALSE(in_parallelogram({8, 8}, StageIndex(1)));
    CHECK(in_parallelogram({8, 8}, StageIndex(2)));
    CHECK(in_parallelogram({-8, -4}, StageIndex(2)));
    CHECK(StageIndex(3).half_width() == 16.0);
    CHECK(StageIndex(3).radius() == 4.0);
}
