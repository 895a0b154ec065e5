#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/growth.hpp"
#include "schur/partition.hpp"
#include "schur/symmetric.hpp"
#include "schur/word.hpp"

namespace schur {

// Reverse plane partition on sh(w), French convention: rows[j-1][i-1] is box (i, j), row 1 at the bottom.
struct HeightMatrix {
    Word word;
    Partition shape;
    std::vector<std::vector<long>> rows;

    long at(int i, int j) const { return rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]; }
};

// Entries weakly increase to the right and upwards.
bool is_reverse_plane_partition(const HeightMatrix& h);

// Throws std::invalid_argument for primed words or inconsistent samples.
HeightMatrix to_plane_partition(const std::vector<Partition>& lambdas, const Word& w);
HeightMatrix to_plane_partition(const ProcessSample& s);
// Diagonal slices; throws std::invalid_argument when the filling is not monotone.
std::vector<Partition> from_plane_partition(const HeightMatrix& h);

// Unit squares on Z², square (x, y) = [x, x+1] × [y, y+1]; white iff x + y is even.
struct Domino {
    long x = 0, y = 0;  // lower-left square
    bool vertical = false;
    bool positive = false;  // top-left square is white; positive dominoes cover holes
    friend bool operator==(const Domino&, const Domino&) = default;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

struct DominoTiling {
    Word word;
    std::optional<int> aztec_order;  // region is the Aztec diamond of this order
    long ymin = 0, ymax = 0;         // window of the strip otherwise
    std::vector<Domino> dominoes;    // sorted
};

inline bool is_white(long x, long y) { return ((x + y) % 2 + 2) % 2 == 0; }

// Odd positions primed, even positions unprimed (1-based).
bool is_steep_word(const Word& w);
// (≺′,≻)^n → n
std::optional<int> aztec_order(const Word& w);
// Squares of the Aztec diamond of order n in tiling coordinates.
bool in_aztec_diamond(int n, long x, long y);

// Diagonal k is the line x − y = −k; Maya cell of square (x, y) on it is y, with charge steep_shift(w, k).
long steep_shift(const Word& w, std::size_t k);

DominoTiling to_steep_tiling(const std::vector<Partition>& lambdas, const Word& w);
DominoTiling to_steep_tiling(const ProcessSample& s);
std::vector<Partition> from_steep_tiling(const DominoTiling& t);

// Replaces two parallel dominoes filling the 2×2 block with lower-left (x, y); nullopt if not flippable.
std::optional<DominoTiling> flip_at(const DominoTiling& t, long x, long y);
// Σ |λ(k)|, the number of flips from the minimal tiling.
long flip_distance_check(const DominoTiling& t);

// Entries stored doubled: 2v, odd values are overlined (k̄ = k − 1/2).
struct OverpartitionTableau {
    int n = 0;
    Partition shape;
    std::vector<std::vector<int>> doubled;  // doubled[r][c], row 0 on top

    std::string text(std::size_t r, std::size_t c) const;  // "3" or "3bar" for 3̄
};

bool is_overpartition_word(const Word& w, int* n = nullptr);
OverpartitionTableau to_plane_overpartition(const std::vector<Partition>& half, const Word& w);
OverpartitionTableau to_plane_overpartition(const SymmetricSample& s);
// The right-free half λ(0..2n).
std::vector<Partition> from_plane_overpartition(const OverpartitionTableau& t);

}  // namespace schur
