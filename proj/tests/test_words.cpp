#include "doctest.h"

#include <stdexcept>
#include "schur/word.hpp"

#include <cmath>

using namespace schur;

namespace {
const Relation L = Relation::LH, R = Relation::RH, Lp = Relation::LV, Rp = Relation::RV;
}

TEST_SUITE("words") {
TEST_CASE("parsing") {
    CHECK(parse_word("<'><>'") == Word{Lp, R, L, Rp});
    CHECK(parse_word("(<'>)^2") == Word{Lp, R, Lp, R});
    CHECK(parse_word(" ( < ( > ' )^2 )^2 ") == Word{L, Rp, Rp, L, Rp, Rp});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("<x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(<>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(<>)^"), std::invalid_argument);
    CHECK(to_string(parse_word("<'>'<>")) == "<'>'<>");
}

TEST_CASE("encoded shape") {
    CHECK(encoded_shape(Word{L, Lp, R, Rp, L, Rp, L, Rp}) == Partition{4, 3, 2, 2});
    CHECK(encoded_shape(Word{R, R, L}).empty());
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<int> stair;
        for (std::size_t k = n; k >= 1; --k) stair.push_back(static_cast<int>(k));
        CHECK(encoded_shape(repeat(Word{Lp, R}, n)) == Partition(stair));
    }
}

TEST_CASE("shape plan") {
    Word w{L, Lp, R, Rp, L, Rp, L, Rp};
    std::vector<int> z{1, 2, 3, 4, 5, 6, 7, 8};
    auto plan = precompute_par<int>(w, z);
    CHECK(plan.shape == Partition{4, 3, 2, 2});
    CHECK(plan.x == std::vector<int>{1, 2, 5, 7});
    CHECK(plan.y == std::vector<int>{8, 6, 4, 3});
    // rows counted from the end of w, so the top row is j = 4
    CHECK(plan.type(1, 4) == BoxType::HH);
    CHECK(plan.type(2, 4) == BoxType::VH);
    CHECK(plan.type(1, 3) == BoxType::HV);
    CHECK(plan.type(2, 3) == BoxType::VV);

    std::vector<double> ones(4, 1.0);
    auto az = precompute_par<double>(repeat(Word{Lp, R}, 2), ones);
    CHECK(az.shape == Partition{2, 1});
    CHECK(az.x == std::vector<double>{1, 1});
    CHECK(az.y == std::vector<double>{1, 1});
    for (int j = 1; j <= 2; ++j)
        for (int i = 1; i <= az.shape.part(static_cast<std::size_t>(j)); ++i) CHECK(az.type(i, j) == BoxType::VH);
    CHECK_THROWS_AS(precompute_par<double>(w, ones), std::invalid_argument);
}

TEST_CASE("boundary path") {
    auto pts = boundary_points(Word{L, R, L, R});
    // starts at (0, n), left symbols step right, right symbols step down
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == std::pair{0, 2});
    CHECK(pts[1] == std::pair{1, 2});
    CHECK(pts[2] == std::pair{1, 1});
    CHECK(pts.back() == std::pair{2, 0});
}

TEST_CASE("q-volume parameters") {
    auto z = q_volume_parameters(Word{L, R}, 0.5);
    CHECK(z[0] == doctest::Approx(2.0));
    CHECK(z[1] == doctest::Approx(0.25));
    CHECK(z[0] * z[1] == doctest::Approx(0.5));
    double q = 0.9;
    auto z4 = q_volume_parameters(Word{L, L, R, R}, q);
    CHECK(z4[0] == doctest::Approx(1 / q));
    CHECK(z4[1] == doctest::Approx(1 / (q * q)));
    CHECK(z4[2] == doctest::Approx(q * q * q));
    CHECK(z4[3] == doctest::Approx(q * q * q * q));
    CHECK_THROWS(q_volume_parameters(Word{L, R}, 1.0));
    CHECK_THROWS(q_volume_parameters(Word{L, R}, 0.0));
}

TEST_CASE("symmetrize") {
    std::vector<int> z{3, 5};
    auto [ws, zs] = symmetrize<int>(Word{L, Rp}, z);
    CHECK(ws == Word{L, Rp, Lp, R});
    CHECK(zs == std::vector<int>{3, 5, 5, 3});
    std::vector<int> none;
    auto [we, ze] = symmetrize<int>(Word{}, none);
    CHECK(we.empty());
    CHECK(ze.empty());
}

TEST_CASE("signs") {
    CHECK(pair_sign(Lp, R) == 1);
    CHECK(pair_sign(L, Rp) == 1);
    CHECK(pair_sign(L, R) == -1);
    CHECK(pair_sign(Lp, Rp) == -1);
    CHECK(left_pair_sign(L, L) == -1);
    CHECK(left_pair_sign(L, Lp) == 1);
}

TEST_CASE("real parsing") {
    CHECK(parse_real("1/4") == 0.25);
    CHECK(parse_real("0.5") == 0.5);
    CHECK(parse_real_list("1, 1/2,2e-1") == std::vector<double>{1, 0.5, 0.2});
    CHECK_THROWS_AS(parse_real("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real("1/0"), std::invalid_argument);
}
}
