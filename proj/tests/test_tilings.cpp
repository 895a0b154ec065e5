#include "doctest.h"

#include <stdexcept>
#include "schur/growth.hpp"
#include "schur/oracle.hpp"
#include "schur/symmetric.hpp"
#include "schur/tilings.hpp"

#include <set>

using namespace schur;

namespace {
std::vector<Partition> fig4() {
    return {{}, {1}, {3, 1}, {4, 2}, {2, 2}, {2}, {3, 2}, {4, 2}, {2}, {}};
}
}  // namespace

TEST_SUITE("tilings_codec") {
TEST_CASE("plane partition of shape (5,5,3,3)") {
    Word w = parse_word("<<<>><<>>");
    auto h = to_plane_partition(fig4(), w);
    CHECK(h.shape == Partition{5, 5, 3, 3});
    // bottom row first
    std::vector<std::vector<long>> want{{0, 0, 2, 2, 2}, {0, 2, 2, 3, 4}, {1, 2, 2}, {1, 3, 4}};
    CHECK(h.rows == want);
    CHECK(is_reverse_plane_partition(h));
    CHECK(from_plane_partition(h) == fig4());

    auto zero = to_plane_partition(std::vector<Partition>(10), w);
    for (const auto& r : zero.rows)
        for (long v : r) CHECK(v == 0);
    CHECK_THROWS_AS(to_plane_partition(std::vector<Partition>(3), parse_word("<'>")), std::invalid_argument);

    h.rows[0][0] = 9;  // breaks monotonicity
    CHECK_FALSE(is_reverse_plane_partition(h));
    CHECK_THROWS_AS(from_plane_partition(h), std::invalid_argument);
}

TEST_CASE("plane partitions round-trip") {
    Word w = parse_word("<><<>><>");
    std::vector<double> z{0.7, 0.8, 0.6, 0.7, 0.9, 0.5, 0.8, 0.6};
    RandomSource src(41);
    for (int k = 0; k < 200; ++k) {
        auto s = schur_sample(w, z, src);
        auto h = to_plane_partition(s);
        CHECK(is_reverse_plane_partition(h));
        CHECK(from_plane_partition(h) == s.lambdas);
    }
}

TEST_CASE("2x2 Aztec diamond") {
    Word w = parse_word("(<'>)^2");
    std::vector<Partition> seq{{}, {1, 1}, {1}, {2}, {}};
    auto t = to_steep_tiling(seq, w);
    REQUIRE(t.aztec_order);
    CHECK(*t.aztec_order == 2);
    // hand-drawn tiling, origin moved by (−4, −2)
    std::vector<Domino> want{{-3, 0, true, true},   {-2, -1, true, true}, {-2, 1, true, true},
                             {-1, -1, true, false}, {-1, 1, true, false}, {0, 0, true, false}};
    std::sort(want.begin(), want.end());
    CHECK(t.dominoes == want);
    CHECK(from_steep_tiling(t) == seq);
    // |(1,1)| + |(1)| + |(2)|
    CHECK(flip_distance_check(t) == 5);
}

TEST_CASE("pyramid partition of width 5") {
    Word w = parse_word("<'<<'<<'>>'>>'>");
    std::vector<Partition> seq{{}, {1}, {1, 1}, {2, 2}, {2, 2, 2}, {3, 3, 2}, {3, 2}, {2, 1}, {2}, {1}, {}};
    auto t = to_steep_tiling(seq, w);
    // hand-drawn 6x6 window, origin moved by (−6, −1); that drawing uses the opposite colouring
    std::set<std::tuple<long, long, bool>> want{
        {-5, 0, true},  {-5, 2, true},  {-5, 4, true},  {-4, 0, false}, {-4, 1, true},  {-4, 3, false},
        {-4, 4, false}, {-4, 5, false}, {-3, 1, false}, {-3, 2, false}, {-2, 0, false}, {-2, 3, true},
        {-2, 5, false}, {-1, 1, true},  {-1, 3, true},  {0, 0, true},   {0, 2, true},   {0, 4, true}};
    std::set<std::tuple<long, long, bool>> got;
    for (const auto& d : t.dominoes)
        if (d.x >= -5 && d.x <= 0 && d.y >= 0 && d.y <= 5) got.insert({d.x, d.y, d.vertical});
    CHECK(got == want);
    CHECK(from_steep_tiling(t) == seq);
    CHECK(flip_distance_check(t) == 32);
}

TEST_CASE("minimal tiling") {
    Word w = parse_word("<'<<'<<'>>'><'<");
    REQUIRE(is_steep_word(w));
    auto t = to_steep_tiling(std::vector<Partition>(w.size() + 1), w);
    CHECK(flip_distance_check(t) == 0);
    CHECK(from_steep_tiling(t) == std::vector<Partition>(w.size() + 1));
    // no 2x2 block of the minimal tiling can be flipped to reduce the volume further
    for (const auto& d : t.dominoes)
        if (auto f = flip_at(t, d.x, d.y)) CHECK(flip_distance_check(*f) == 1);
    CHECK_THROWS_AS(to_steep_tiling(std::vector<Partition>(3), parse_word("<>")), std::invalid_argument);
}

TEST_CASE("Aztec diamonds of order 1..3 through the codec") {
    for (int n = 1; n <= 3; ++n) {
        Word w = repeat(parse_word("<'>"), static_cast<std::size_t>(n));
        std::vector<mpq_class> ones(w.size(), 1);
        auto s = oracle::enumerate_support(w, ones, 12);
        std::set<std::vector<Domino>> tilings;
        for (const auto& [seq, wt] : s.entries) {
            auto t = to_steep_tiling(seq, w);
            // exact cover of the diamond
            std::set<std::pair<long, long>> cells;
            for (const auto& d : t.dominoes) {
                cells.insert({d.x, d.y});
                cells.insert(d.vertical ? std::pair{d.x, d.y + 1} : std::pair{d.x + 1, d.y});
            }
            CHECK(cells.size() == 2 * t.dominoes.size());
            CHECK(cells.size() == static_cast<std::size_t>(2 * n * (n + 1)));
            for (auto [x, y] : cells) CHECK(in_aztec_diamond(n, x, y));
            CHECK(from_steep_tiling(t) == seq);
            tilings.insert(t.dominoes);
        }
        CHECK(tilings.size() == static_cast<std::size_t>(1) << (n * (n + 1) / 2));
    }
}

TEST_CASE("flips change the volume by one") {
    Word w = parse_word("(<'<)^3(>'>)^3");
    std::vector<double> z{0.6, 0.7, 0.6, 0.7, 0.6, 0.7, 0.7, 0.6, 0.7, 0.6, 0.7, 0.6};
    RandomSource src(42);
    for (int k = 0; k < 50; ++k) {
        auto s = schur_sample(w, z, src);
        auto t = to_steep_tiling(s);
        long v = flip_distance_check(t);
        for (const auto& d : t.dominoes)
            if (auto f = flip_at(t, d.x, d.y)) {
                long u = flip_distance_check(*f);
                CHECK(std::abs(u - v) == 1);
                CHECK(flip_at(*f, d.x, d.y)->dominoes == t.dominoes);
            }
    }
}

TEST_CASE("plane overpartition") {
    Word w = repeat(parse_word("<<'"), 4);
    int n = 0;
    CHECK(is_overpartition_word(w, &n));
    CHECK(n == 4);
    std::vector<Partition> half{{}, {1}, {2}, {2, 2}, {3, 3, 1}, {5, 3, 1}, {5, 4, 1}, {5, 4, 1, 1}, {5, 4, 2, 1}};
    auto t = to_plane_overpartition(half, w);
    CHECK(t.shape == Partition{5, 4, 2, 1});
    std::vector<std::vector<std::string>> want{
        {"4", "4bar", "3bar", "2", "2"}, {"3", "3", "3bar", "2bar"}, {"3bar", "1bar"}, {"1"}};
    for (std::size_t r = 0; r < want.size(); ++r)
        for (std::size_t c = 0; c < want[r].size(); ++c) CHECK(t.text(r, c) == want[r][c]);
    CHECK(from_plane_overpartition(t) == half);

    auto e = to_plane_overpartition(std::vector<Partition>(9), w);
    CHECK(e.shape.empty());

    RandomSource src(43);
    std::vector<double> z(8, 0.6);
    for (int k = 0; k < 200; ++k) {
        auto s = symmetric_schur_sample(w, z, 0.8, BoundaryMode::free, src);
        auto o = to_plane_overpartition(s);
        std::vector<Partition> h(s.lambdas.begin(), s.lambdas.begin() + 9);
        CHECK(from_plane_overpartition(o) == h);
    }
    CHECK_FALSE(is_overpartition_word(parse_word("<'<")));
}
}
