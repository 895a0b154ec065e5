#include "doctest.h"

#include <stdexcept>
#include "schur/local_rules.hpp"

using namespace schur;

TEST_SUITE("local_rules") {
TEST_CASE("HH") {
    CHECK(grow_hh(Partition{2, 1}, Partition{3}, Partition{1}, 2) == Partition{5, 2});
    CHECK(grow_hh({}, {}, {}, 0) == Partition{});
    for (int k = 0; k < 6; ++k) CHECK(grow_hh({}, {}, {}, k) == Partition{k});
    CHECK_THROWS_AS(grow_hh(Partition{1, 1}, Partition{}, Partition{}, 0), std::invalid_argument);
    CHECK_THROWS_AS(grow_hh({}, {}, {}, -1), std::invalid_argument);
}

TEST_CASE("VV") {
    // conjugates (3),(2),(2) give (4) under HH; weight 4 + 2 = 3 + 2 + 1
    CHECK(grow_vv(Partition{1, 1, 1}, Partition{1, 1}, Partition{1, 1}, 1) == Partition{1, 1, 1, 1});
    CHECK(grow_vv({}, {}, {}, 0) == Partition{});
    CHECK(grow_vv({}, {}, {}, 3) == Partition{1, 1, 1});
    CHECK(grow_vv(Partition{1}, Partition{1}, Partition{}, 1) == Partition{2, 1});
}

TEST_CASE("HV and VH") {
    CHECK(grow_hv(Partition{1}, Partition{2}, Partition{1}, 1) == Partition{3});
    CHECK(grow_hv(Partition{2, 1}, Partition{2}, Partition{1}, 0) == Partition{2, 1, 1});
    CHECK(grow_hv({}, {}, {}, 1) == Partition{1});
    CHECK(grow_vh(Partition{2}, Partition{1}, Partition{1}, 1) == Partition{3});
    CHECK(grow_vh({}, {}, {}, 0) == Partition{});
    // ν/λ must be a vertical strip, so with λ = ∅ the output is a column
    CHECK(grow_vh({}, Partition{1}, {}, 1) == Partition{1, 1});
    CHECK_THROWS_AS(grow_hv({}, {}, {}, 2), std::invalid_argument);
}

TEST_CASE("shrink inverts grow") {
    CHECK(shrink(BoxType::HH, Partition{2, 1}, Partition{5, 2}, Partition{3}) == Preimage{Partition{1}, 2});
    CHECK(shrink(BoxType::HV, Partition{1}, Partition{3}, Partition{2}) == Preimage{Partition{1}, 1});
    CHECK(shrink(BoxType::HH, {}, {}, {}) == Preimage{Partition{}, 0});
    CHECK_THROWS_AS(shrink(BoxType::HH, Partition{2}, Partition{1}, Partition{}), std::invalid_argument);
}

TEST_CASE("diagonal rules") {
    CHECK(grow_diag_h(Partition{2, 1}, Partition{1}, 1) == Partition{3, 2, 1});
    CHECK(grow_diag_h({}, {}, 0) == Partition{});
    CHECK(grow_diag_h({}, {}, 4) == Partition{4});
    CHECK(grow_diag_h_er(Partition{2, 1}, Partition{2}, 0) == Partition{2, 2});
    CHECK(grow_diag_h_er({}, {}, 1) == Partition{2});
    CHECK(grow_diag_h_er(Partition{1}, {}, 0) == Partition{2});
    CHECK_THROWS_AS(grow_diag_h_er(Partition{2, 1}, Partition{1}, 0), std::invalid_argument);
    CHECK(grow_diag_h_ec(Partition{2, 1}, Partition{1, 1}) == Partition{2, 2});
    CHECK(grow_diag_h_ec({}, {}) == Partition{});
    CHECK(grow_diag_h_ec(Partition{1}, {}) == Partition{1, 1});
    CHECK_THROWS_AS(grow_diag_h_ec(Partition{2, 1}, Partition{1}), std::invalid_argument);
    CHECK(shrink_diag_h(Partition{2, 1}, Partition{3, 2, 1}) == Preimage{Partition{1}, 1});
    CHECK(grow_diag_v(conjugate(Partition{2, 1}), conjugate(Partition{1}), 1) == conjugate(Partition{3, 2, 1}));
}

TEST_CASE("HV block structure") {
    auto b = hv_blocks(Partition{2, 1}, Partition{2});
    CHECK(blocks_interleave(b));
    CHECK(b.nu_positions.size() == b.kappa_positions.size() + 1);
}
}
