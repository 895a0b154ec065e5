#include "doctest.h"

#include <stdexcept>
#include "schur/random.hpp"

#include <cmath>
#include <set>

using namespace schur;

TEST_SUITE("randomness") {
TEST_CASE("reproducible streams") {
    RandomSource a(42), b(42), c(43);
    for (int k = 0; k < 10; ++k) CHECK(a.next_u64() == b.next_u64());
    RandomSource d(42);
    CHECK(d.next_u64() != c.next_u64());
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(stream_seed(7, i));
    CHECK(seeds.size() == 1000);
    CHECK(stream_seed(7, 3) == stream_seed(7, 3));
}

TEST_CASE("uniform stays inside (0,1)") {
    RandomSource src(1);
    for (int k = 0; k < 100000; ++k) {
        double u = src.uniform_open();
        CHECK_UNARY(u > 0.0);
        CHECK_UNARY(u < 1.0);
    }
}

TEST_CASE("geometric") {
    RandomSource src(2);
    for (int k = 0; k < 100; ++k) CHECK(geometric(0.0, src) == 0);
    CHECK_THROWS_AS(geometric(1.0, src), std::domain_error);
    CHECK_THROWS_AS(geometric(-0.1, src), std::domain_error);

    const int n = 1000000;
    double sum = 0;
    for (int k = 0; k < n; ++k) sum += static_cast<double>(geometric(0.5, src));
    // mean 1, variance ξ/(1−ξ)² = 2
    CHECK(std::abs(sum / n - 1.0) < 3 * std::sqrt(2.0 / n));

    long zeros = 0;
    for (int k = 0; k < n; ++k) zeros += geometric(0.9, src) == 0;
    CHECK(std::abs(static_cast<double>(zeros) / n - 0.1) < 3 * std::sqrt(0.1 * 0.9 / n));
}

TEST_CASE("bernoulli") {
    RandomSource src(3);
    for (int k = 0; k < 100; ++k) {
        CHECK(bernoulli(0.0, src) == 0);
        CHECK(bernoulli(1.0, src) == 1);
    }
    CHECK_THROWS_AS(bernoulli(1.5, src), std::domain_error);
    const int n = 1000000;
    long ones = 0;
    for (int k = 0; k < n; ++k) ones += bernoulli(0.25, src);
    CHECK(std::abs(static_cast<double>(ones) / n - 0.25) < 3 * std::sqrt(0.25 * 0.75 / n));
}

TEST_CASE("poisson and uniform integers") {
    RandomSource src(4);
    const int n = 200000;
    for (double mean : {0.5, 3.0, 75.0}) {
        double s = 0;
        for (int k = 0; k < n; ++k) s += static_cast<double>(poisson(mean, src));
        CHECK(std::abs(s / n - mean) < 4 * std::sqrt(mean / n));
    }
    CHECK(poisson(0.0, src) == 0);
    long hits[5] = {};
    for (int k = 0; k < 50000; ++k) ++hits[uniform_below(5, src)];
    for (long h : hits) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("draw log") {
    RandomSource src(5);
    src.set_logging(true);
    long g = geometric(0.3, src);
    long b = bernoulli(0.6, src);
    REQUIRE(src.draw_log().size() == 2);
    CHECK(src.draw_log()[0] == DrawRecord{DrawKind::geometric, 0.3, g});
    CHECK(src.draw_log()[1] == DrawRecord{DrawKind::bernoulli, 0.6, b});
}
}
