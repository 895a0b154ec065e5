#include "doctest.h"

#include <stdexcept>
#include "schur/oracle.hpp"
#include "schur/partition_function.hpp"
#include "schur/rational.hpp"

#include <cmath>
#include <set>

using namespace schur;

TEST_SUITE("oracle") {
TEST_CASE("strip generators") {
    auto up = oracle::add_vertical_strips(Partition{2}, 4);
    std::set<Partition> got(up.begin(), up.end());
    std::set<Partition> want{Partition{2}, Partition{3}, Partition{2, 1}, Partition{3, 1}, Partition{2, 1, 1}};
    CHECK(got == want);
    auto down = oracle::remove_vertical_strips(Partition{2, 1});
    CHECK(std::set<Partition>(down.begin(), down.end()) ==
          std::set<Partition>{Partition{2, 1}, Partition{2}, Partition{1, 1}, Partition{1}});
    auto hdown = oracle::remove_horizontal_strips(Partition{2, 1});
    CHECK(std::set<Partition>(hdown.begin(), hdown.end()) ==
          std::set<Partition>{Partition{2, 1}, Partition{2}, Partition{1, 1}, Partition{1}});
    for (const auto& p : oracle::add_horizontal_strips(Partition{2, 1}, 6)) CHECK(interlaces(p, Partition{2, 1}, Relation::RH));
}

TEST_CASE("single box support") {
    std::vector<mpq_class> z{mpq_class(1, 2), mpq_class(1, 3)};
    auto s = oracle::enumerate_support(parse_word("<>"), z, 3);
    REQUIRE(s.entries.size() == 4);
    mpq_class xy(1, 6);
    for (int k = 0; k <= 3; ++k) {
        oracle::Sequence seq{Partition{}, k ? Partition{k} : Partition{}, Partition{}};
        CHECK(s.entries.at(seq) == pow(xy, static_cast<unsigned long>(k)));
    }
    CHECK_FALSE(s.complete());
    CHECK(s.tail_probability == pow(xy, 4));
}

TEST_CASE("Aztec n=2 is uniform on 8") {
    std::vector<mpq_class> ones(4, 1);
    auto s = oracle::enumerate_support(parse_word("(<'>)^2"), ones, 12);
    CHECK(s.entries.size() == 8);
    CHECK(s.complete());
    for (const auto& [seq, w] : s.entries) CHECK(oracle::exact_probability(seq, s) == mpq_class(1, 8));
}

TEST_CASE("empty shape and point probabilities") {
    std::vector<mpq_class> z{1, 1};
    auto s = oracle::enumerate_support(parse_word("><"), z, 5);
    REQUIRE(s.entries.size() == 1);
    CHECK(oracle::exact_probability(oracle::Sequence(3), s) == 1);

    std::vector<mpq_class> h{1, mpq_class(1, 2)};
    auto g = oracle::enumerate_support(parse_word("<>"), h, 40);
    // P(λ(1) = ∅) = 1 − xy
    mpq_class p = oracle::exact_probability(oracle::Sequence(3), g);
    mpq_class Z = z_finite(parse_word("<>"), h).rational;
    CHECK(std::abs(mpq_class(p - mpq_class(1, 2)).get_d()) < 1e-12);
    CHECK(1 / Z == mpq_class(1, 2));
    CHECK_THROWS(oracle::exact_probability(oracle::Sequence{Partition{}, Partition{1, 1}, Partition{}}, g));
}

TEST_CASE("total variation") {
    std::vector<mpq_class> ones(4, 1);
    auto s = oracle::enumerate_support(parse_word("(<'>)^2"), ones, 12);
    oracle::Histogram exact, point;
    for (const auto& [seq, w] : s.entries) exact.add(seq, s);
    CHECK(oracle::tv_distance(exact, s) == doctest::Approx(0.0));
    point.add(s.entries.begin()->first, s);
    CHECK(oracle::tv_distance(point, s) == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("noise floor of the TV estimator") {
    std::vector<mpq_class> ones(4, 1);
    auto s = oracle::enumerate_support(parse_word("(<'>)^2"), ones, 12);
    // two draws from the uniform law on 8: (8·7/8 + 56·3/4) / 64
    CHECK(oracle::expected_null_tv(s, 2) == doctest::Approx(49.0 / 64.0));

    // brute force over every ordered triple of draws
    std::vector<mpq_class> z{mpq_class(1, 2), mpq_class(1, 3)};
    auto g = oracle::enumerate_support(parse_word("<>"), z, 3);
    std::vector<std::pair<oracle::Sequence, double>> cells;
    double total = g.total().get_d();
    for (const auto& [seq, w] : g.entries) cells.emplace_back(seq, w.get_d() / total);
    double expect = 0;
    for (const auto& a : cells)
        for (const auto& b : cells)
            for (const auto& c : cells) {
                oracle::Histogram h;
                h.add(a.first, g);
                h.add(b.first, g);
                h.add(c.first, g);
                expect += a.second * b.second * c.second * oracle::tv_distance(h, g);
            }
    CHECK(oracle::expected_null_tv(g, 3) == doctest::Approx(expect).epsilon(1e-12));
    // shrinks like n^{-1/2}
    CHECK(oracle::expected_null_tv(s, 40000) < 0.5 * oracle::expected_null_tv(s, 10000) + 1e-4);
}

TEST_CASE("chi-square") {
    std::vector<std::uint64_t> obs{250, 250, 250, 250};
    std::vector<double> p{0.25, 0.25, 0.25, 0.25};
    auto c = oracle::chi_square(obs, p);
    CHECK(c.statistic == doctest::Approx(0.0));
    CHECK(c.dof == 3);
    CHECK(c.p_value == doctest::Approx(1.0));
    std::vector<std::uint64_t> skew{400, 200, 200, 200};
    auto d = oracle::chi_square(skew, p);
    CHECK(d.statistic == doctest::Approx(120.0));
    CHECK(d.p_value < 1e-10);
}

TEST_CASE("bijection certificates") {
    auto r0 = oracle::verify_bijections(0);
    CHECK(r0.ok());
    auto r = oracle::verify_bijections(3);
    CHECK(r.ok());
    CHECK(r.interleave_checks > 0);
    for (const auto& rule : r.rules) CHECK(rule.cases > 0);
}

TEST_CASE("hook length formula") {
    CHECK(oracle::hook_length_f(Partition{}) == 1);
    CHECK(oracle::hook_length_f(Partition{2, 1}) == 2);
    CHECK(oracle::hook_length_f(Partition{2, 2}) == 2);
    CHECK(oracle::hook_length_f(Partition{3, 2}) == 5);
    // Σ (f^λ)² = n!
    for (int n = 0; n <= 7; ++n) {
        mpz_class s = 0, fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        for (const auto& p : partitions_of(n)) s += oracle::hook_length_f(p) * oracle::hook_length_f(p);
        CHECK(s == fact);
    }
    CHECK(oracle::plancherel_probability(Partition{}, 1.0) == doctest::Approx(std::exp(-1.0)));
}
}
