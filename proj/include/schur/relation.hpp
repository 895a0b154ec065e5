#pragma once

#include <cstdint>
#include <string_view>

namespace schur {

// LH = ≺, RH = ≻, LV = ≺′, RV = ≻′.
enum class Relation : std::uint8_t { LH, RH, LV, RV };

constexpr bool is_left(Relation r) noexcept { return r == Relation::LH || r == Relation::LV; }
constexpr bool is_primed(Relation r) noexcept { return r == Relation::LV || r == Relation::RV; }

// ≺ ↔ ≻, ≺′ ↔ ≻′.
constexpr Relation invert(Relation r) noexcept {
    switch (r) {
        case Relation::LH: return Relation::RH;
        case Relation::RH: return Relation::LH;
        case Relation::LV: return Relation::RV;
        case Relation::RV: return Relation::LV;
    }
    return r;
}

constexpr Relation make_relation(bool left, bool primed) noexcept {
    if (left) return primed ? Relation::LV : Relation::LH;
    return primed ? Relation::RV : Relation::RH;
}

constexpr std::string_view ascii(Relation r) noexcept {
    switch (r) {
        case Relation::LH: return "<";
        case Relation::RH: return ">";
        case Relation::LV: return "<'";
        case Relation::RV: return ">'";
    }
    return "?";
}

}  // namespace schur
