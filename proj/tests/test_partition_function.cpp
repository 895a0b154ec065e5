#include "doctest.h"

#include <stdexcept>
#include "schur/partition_function.hpp"
#include "schur/rational.hpp"

#include <cmath>

using namespace schur;

namespace {
std::vector<mpq_class> q(std::initializer_list<mpq_class> v) { return v; }
}

TEST_SUITE("partition_functions") {
TEST_CASE("rational parsing") {
    CHECK(*parse_rational("3/6") == mpq_class(1, 2));
    CHECK(*parse_rational("0.125") == mpq_class(1, 8));
    CHECK(*parse_rational("-2") == -2);
    CHECK(*parse_rational("1e-2") == mpq_class(1, 100));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("x"));
    CHECK_FALSE(parse_rational("1/2/3"));
    CHECK(parse_rational_list("1/2, 3")->size() == 2);
    CHECK_FALSE(parse_rational_list("1/2,,3"));
    CHECK(to_string(mpq_class(4, 3)) == "4/3");
    CHECK(pow(mpq_class(2, 3), 3) == mpq_class(8, 27));
}

TEST_CASE("finite words") {
    auto az = z_finite(parse_word("(<'>)^2"), q({1, 1, 1, 1}));
    CHECK(az.exact);
    CHECK(az.rational == 8);
    CHECK(az.str() == "8");
    CHECK(z_finite(parse_word("<>"), q({mpq_class(1, 2), mpq_class(1, 2)})).str() == "4/3");
    CHECK(z_finite(parse_word("<>"), q({mpq_class(1, 3), mpq_class(3, 4)})).rational == mpq_class(4, 3));
    CHECK(z_finite(parse_word("><"), q({5, 7})).rational == 1);
    for (int n = 1; n <= 5; ++n) {
        std::vector<mpq_class> ones(2 * static_cast<std::size_t>(n), 1);
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n * (n + 1) / 2));
        CHECK(z_finite(repeat(parse_word("<'>"), static_cast<std::size_t>(n)), ones).rational == mpq_class(expect));
    }
}

TEST_CASE("divergence and floating point") {
    auto d = z_finite(parse_word("<>"), q({1, 1}));
    CHECK_FALSE(d.finite);
    CHECK(d.str() == "inf");
    std::vector<double> z{0.5, 0.5};
    auto v = z_finite(parse_word("<>"), std::span<const double>(z));
    CHECK_FALSE(v.exact);
    CHECK(v.value() == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("symmetric words") {
    mpq_class z(1, 3), t(1, 2);
    auto one = q({z});
    Word w = parse_word("<");
    CHECK(z_symmetric(w, one, t, BoundaryMode::free).rational == 1 / (1 - t * z));
    CHECK(z_symmetric(w, one, t, BoundaryMode::even_rows).rational == 1 / (1 - t * z * t * z));
    CHECK(z_symmetric(w, one, t, BoundaryMode::even_columns).rational == 1);
    CHECK(z_symmetric(parse_word("<'"), one, t, BoundaryMode::even_columns).rational == 1 / (1 - t * z * t * z));
}

TEST_CASE("text front end") {
    std::string t = "1/2";
    CHECK(z_from_text(parse_word("<>"), "1/2,1/2", nullptr, BoundaryMode::free).str() == "4/3");
    CHECK(z_from_text(parse_word("<"), "1/2", &t, BoundaryMode::free).str() == "4/3");
    auto approx = z_from_text(parse_word("<>"), "0.5,0.5", nullptr, BoundaryMode::free);
    CHECK(approx.exact);  // finite decimals are rational
    CHECK_THROWS_AS(z_from_text(parse_word("<>"), "-1,1", nullptr, BoundaryMode::free), std::domain_error);
    std::string zero = "0";
    CHECK_THROWS_AS(z_from_text(parse_word("<"), "1/2", &zero, BoundaryMode::free), std::domain_error);
    // long words fall back to floating point
    std::string many;
    for (int k = 0; k < 50; ++k) many += k ? ",1/4" : "1/4";
    auto big = z_from_text(repeat(parse_word("<>"), 25), many, nullptr, BoundaryMode::free);
    CHECK_FALSE(big.exact);
    CHECK(big.finite);
}
}
