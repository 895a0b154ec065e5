#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "schur/relation.hpp"

namespace schur {

// Weakly decreasing sequence of positive integers, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Skips validation; only trims zeros. For kernels that already know the shape is valid.
    static Partition from_trusted(std::vector<int> parts);

    // 1-based; 0 beyond the length.
    int part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    std::size_t length() const noexcept { return parts_.size(); }
    long weight() const noexcept { return weight_; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::span<const int> parts() const noexcept { return parts_; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    void trim();
    std::vector<int> parts_;
    long weight_ = 0;
};

Partition conjugate(const Partition& lambda);

// μ ⊆ λ as Young diagrams.
bool contains(const Partition& lambda, const Partition& mu);

// λ rel μ. For RH: λ/μ horizontal strip. RV: λ/μ vertical strip. LH/LV swap arguments.
bool interlaces(const Partition& lambda, const Partition& mu, Relation rel);

bool all_parts_even(const Partition& lambda);
bool all_columns_even(const Partition& lambda);

std::string to_string(const Partition& lambda);

// All partitions of n, reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions with weight ≤ max_weight, grouped by weight.
std::vector<Partition> partitions_up_to(int max_weight);

enum class MayaCell : std::uint8_t { hole, particle };

// Cells at consecutive half-integer positions; offset2 = 2 * position of cells[0] (odd).
struct MayaWindow {
    long offset2 = 1;
    std::vector<MayaCell> cells;

    double first_position() const { return offset2 / 2.0; }
    // 2 * position of cell k.
    long position2(std::size_t k) const { return offset2 + 2 * static_cast<long>(k); }
};

// Window covers half-integer positions lo+1/2, ..., hi-1/2 (hi > lo).
// Throws std::out_of_range when the window cuts a non-vacuum cell.
MayaWindow to_maya(const Partition& lambda, long shift, long lo, long hi);

struct MayaDecoded {
    Partition partition;
    long shift = 0;
};

// Assumes vacuum outside the window (particles left, holes right).
MayaDecoded from_maya(const MayaWindow& window);

}  // namespace schur
