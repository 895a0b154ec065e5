#include "doctest.h"

#include <stdexcept>
#include "schur/plancherel.hpp"
#include "schur/unbounded.hpp"

#include <cmath>

using namespace schur;

TEST_SUITE("infinite_sampler") {
TEST_CASE("cantor pairing") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 1);
    CHECK(cantor_pair(0, 1) == 2);
    CHECK(cantor_pair(2, 0) == 3);
    CHECK(cantor_pair(0, 2) == 5);
    for (std::uint64_t k = 0; k < 5000; ++k) {
        auto [i, j] = cantor_unpair(k);
        CHECK(cantor_pair(i, j) == k);
    }
    CHECK(cantor_unpair(cantor_pair(123456, 654321)) == std::pair<std::uint64_t, std::uint64_t>{123456, 654321});
}

TEST_CASE("truncation index, trivial parameters") {
    RandomSource src(31);
    auto zero = ParameterSequences::finite({}, {});
    for (int k = 0; k < 100; ++k) CHECK_FALSE(sample_truncation_index(zero, WordConvention::all_unprimed(), src));
    auto run = unbounded_schur_sample(zero, WordConvention::alternating(), src);
    CHECK(run.all_empty());
}

TEST_CASE("truncation index, one box") {
    RandomSource src(32);
    auto p = ParameterSequences::finite({0.5}, {0.6});  // c = 0.3 on a geometric box
    const int n = 200000;
    long hits = 0;
    for (int k = 0; k < n; ++k) {
        auto K = sample_truncation_index(p, WordConvention::all_unprimed(), src);
        if (K) {
            CHECK(*K == 0);
            ++hits;
        }
    }
    CHECK(std::abs(static_cast<double>(hits) / n - 0.3) < 3.5 * std::sqrt(0.21 / n));
}

TEST_CASE("pyramidal samples interlace and vanish at the ends") {
    RandomSource src(33);
    for (const auto& c : {WordConvention::all_unprimed(), WordConvention::alternating()}) {
        auto p = ParameterSequences::q_volume(0.6);
        for (int k = 0; k < 300; ++k) {
            auto s = unbounded_schur_sample(p, c, src);
            CHECK_NOTHROW(validate_pyramidal(s, c));
            CHECK(s.at(s.min_index).empty());
            CHECK(s.at(s.max_index()).empty());
        }
    }
}

TEST_CASE("partition function of the infinite word") {
    auto zero = ParameterSequences::finite({}, {});
    CHECK(z_pyramidal(zero, WordConvention::all_unprimed(), 1e-12).value == 1.0);

    // MacMahon: ∏ (1 − q^n)^{−n}
    double q = 0.5;
    auto z = z_pyramidal(ParameterSequences::q_volume(q), WordConvention::all_unprimed(), 1e-12);
    double log_mac = 0;
    for (int n = 1; n < 200; ++n) log_mac -= n * std::log1p(-std::pow(q, n));
    CHECK(std::abs(z.log_value - log_mac) < 1e-10);
    // direct double product over i + j < 120
    double log_direct = 0;
    for (int i = 0; i < 120; ++i)
        for (int j = 0; i + j < 120; ++j) log_direct -= std::log1p(-std::pow(q, i + j + 1));
    CHECK(std::abs(z.log_value - log_direct) < 1e-10);

    auto pc = z_pyramidal(ParameterSequences::q_volume(q), WordConvention::alternating(), 1e-12,
                          AccumulationOrder::cantor);
    auto pd = z_pyramidal(ParameterSequences::q_volume(q), WordConvention::alternating(), 1e-12,
                          AccumulationOrder::diagonal_reversed);
    CHECK(std::abs(pc.log_value - pd.log_value) < 1e-10);
    CHECK(pc.rel_error_bound <= 1e-12);
}

TEST_CASE("geometric parameter families") {
    auto p = ParameterSequences::geometric(0.5, 0.5, 0.4, 0.25);
    CHECK(p.a(0) == 0.5);
    CHECK(p.a(2) == doctest::Approx(0.125));
    CHECK(p.b(1) == doctest::Approx(0.1));
    CHECK_THROWS(ParameterSequences::geometric(0.5, 1.0, 0.5, 0.5));
}
}

TEST_SUITE("plancherel") {
TEST_CASE("growth of point configurations") {
    // identity permutation: one increasing run
    std::vector<int> id{1, 2, 3, 4};
    CHECK(grow_point_configuration(id, 4) == Partition{4});
    std::vector<int> rev{4, 3, 2, 1};
    CHECK(grow_point_configuration(rev, 4) == Partition{1, 1, 1, 1});
    std::vector<int> none;
    CHECK(grow_point_configuration(none, 0).empty());
}

TEST_CASE("mean size is theta") {
    RandomSource src(34);
    const int n = 100000;
    double theta = 2.5, sum = 0;
    for (int k = 0; k < n; ++k) sum += static_cast<double>(plancherel_sample(theta, src).weight());
    CHECK(std::abs(sum / n - theta) < 3.5 * std::sqrt(theta / n));
    CHECK_THROWS_AS(plancherel_sample(0.0, src), std::domain_error);
}

TEST_CASE("mixed measure") {
    RandomSource src(35);
    std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(mixed_plancherel_sample(1.0, zeros, src).empty());
    std::vector<double> b{0.5, 0.5};
    for (int k = 0; k < 200; ++k) CHECK(mixed_plancherel_sample(1.0, b, src).length() <= 2);
}
}
