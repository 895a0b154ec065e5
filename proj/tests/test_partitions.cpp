#include "doctest.h"

#include <stdexcept>
#include "schur/partition.hpp"

#include <set>

using namespace schur;

TEST_SUITE("partitions") {
TEST_CASE("construction validates and trims") {
    Partition p{3, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p.weight() == 4);
    CHECK(p.part(1) == 3);
    CHECK(p.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{0, 0}.empty());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{2, 2, 2, 1, 1}) == Partition{5, 3});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{5, 2}) == Partition{2, 2, 1, 1, 1});
    CHECK(conjugate(Partition{2}) == Partition{1, 1});
    for (const auto& p : partitions_up_to(8)) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).weight() == p.weight());
    }
}

TEST_CASE("interlacing") {
    CHECK(interlaces(Partition{3, 1}, Partition{2, 1}, Relation::RH));
    CHECK(interlaces(Partition{2, 1}, Partition{1, 1}, Relation::RV));
    CHECK_FALSE(interlaces(Partition{3, 1}, Partition{1, 1}, Relation::RV));
    CHECK(interlaces(Partition{2, 1}, Partition{3, 1}, Relation::LH));
    CHECK(interlaces(Partition{1, 1}, Partition{2, 1}, Relation::LV));
    CHECK_FALSE(interlaces(Partition{1, 1}, Partition{2}, Relation::LH));
    CHECK_FALSE(interlaces(Partition{2}, Partition{1, 1}, Relation::RH));
    for (const auto& p : partitions_up_to(5))
        for (Relation r : {Relation::LH, Relation::RH, Relation::LV, Relation::RV}) CHECK(interlaces(p, p, r));
    // ≻′ is ≻ on conjugates
    for (const auto& a : partitions_up_to(6))
        for (const auto& b : partitions_up_to(6))
            CHECK(interlaces(a, b, Relation::RV) == interlaces(conjugate(a), conjugate(b), Relation::RH));
}

TEST_CASE("partition counts") {
    // p(0..10)
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
    std::set<Partition> all;
    for (const auto& q : partitions_up_to(6)) all.insert(q);
    CHECK(all.size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
}

TEST_CASE("parity predicates") {
    CHECK(all_parts_even(Partition{4, 2, 2}));
    CHECK_FALSE(all_parts_even(Partition{3, 1}));
    CHECK(all_columns_even(Partition{3, 3, 1, 1}));
    CHECK_FALSE(all_columns_even(Partition{2, 1}));
    CHECK(all_parts_even(Partition{}));
    CHECK(all_columns_even(Partition{}));
}

TEST_CASE("maya diagrams") {
    auto vac = to_maya(Partition{}, 0, -5, 5);
    for (std::size_t k = 0; k < vac.cells.size(); ++k)
        CHECK((vac.cells[k] == MayaCell::particle) == (vac.position2(k) < 0));

    // particles at 3/2, 1/2, −1/2, −5/2, −7/2, −11/2, −13/2; holes elsewhere in the window
    auto m = to_maya(Partition{2, 2, 2, 1, 1}, 0, -7, 7);
    std::set<long> particles2{3, 1, -1, -5, -7, -11, -13};
    for (std::size_t k = 0; k < m.cells.size(); ++k)
        CHECK((m.cells[k] == MayaCell::particle) == (particles2.count(m.position2(k)) == 1));

    auto back = from_maya(m);
    CHECK(back.partition == Partition{2, 2, 2, 1, 1});
    CHECK(back.shift == 0);
    auto shifted = from_maya(to_maya(Partition{4, 1}, 3, -4, 12));
    CHECK(shifted.partition == Partition{4, 1});
    CHECK(shifted.shift == 3);
    CHECK_THROWS_AS(to_maya(Partition{5}, 0, -2, 3), std::out_of_range);
}
}
