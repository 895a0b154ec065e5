#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schur/partition.hpp"
#include "schur/relation.hpp"

namespace schur {

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Relation> symbols) : symbols_(symbols) {}
    explicit Word(std::vector<Relation> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    // 1-based like the word positions w_1..w_n
    Relation at(std::size_t k) const { return symbols_.at(k - 1); }
    Relation operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }
    const std::vector<Relation>& symbols() const noexcept { return symbols_; }

    std::size_t left_count() const;
    std::size_t right_count() const { return size() - left_count(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Relation> symbols_;
};

Word operator+(const Word& a, const Word& b);
Word repeat(const Word& w, std::size_t n);

// Grammar: symbol := ('<' | '>') ['\''];  group := '(' seq ')' ['^' int];  whitespace ignored.
// Throws std::invalid_argument with the offending column.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

// Parts: for each right symbol, read from the end, the number of left symbols before it.
Partition encoded_shape(const Word& w);

enum class BoxType : std::uint8_t { HH, HV, VH, VV };

std::string_view to_string(BoxType t);

// u is the left symbol of the column, v the right symbol of the row.
constexpr BoxType box_type(Relation u, Relation v) noexcept {
    bool up = is_primed(u);
    bool vp = is_primed(v);
    if (!up && !vp) return BoxType::HH;
    if (!up && vp) return BoxType::HV;
    if (up && !vp) return BoxType::VH;
    return BoxType::VV;
}

constexpr bool is_dual(BoxType t) noexcept { return t == BoxType::HV || t == BoxType::VH; }

// ε for a pair (left symbol before right symbol): +1 for (≺,≻′) and (≺′,≻), −1 otherwise.
constexpr int pair_sign(Relation left, Relation right) noexcept {
    return is_primed(left) != is_primed(right) ? 1 : -1;
}

// δ for two left symbols: −1 if equal, +1 otherwise.
constexpr int left_pair_sign(Relation a, Relation b) noexcept { return a == b ? -1 : 1; }

template <class Scalar>
struct ShapePlan {
    Partition shape;
    std::vector<Scalar> x;  // per column, left symbols in order
    std::vector<Scalar> y;  // per row, right symbols counted from the end of w
    std::vector<Relation> left;
    std::vector<Relation> right;
    // boundary_index[k] = lattice point l_k as (i, j), k = 0..|w|
    std::vector<std::pair<int, int>> boundary;

    int columns() const { return static_cast<int>(x.size()); }
    int rows() const { return static_cast<int>(y.size()); }
    // 1-based; row j has shape.part(j) boxes
    bool contains(int i, int j) const {
        return i >= 1 && j >= 1 && i <= shape.part(static_cast<std::size_t>(j));
    }
    BoxType type(int i, int j) const {
        return box_type(left[static_cast<std::size_t>(i - 1)], right[static_cast<std::size_t>(j - 1)]);
    }
    Scalar xi(int i, int j) const {
        return x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)];
    }
};

std::vector<std::pair<int, int>> boundary_points(const Word& w);

template <class Scalar>
ShapePlan<Scalar> precompute_par(const Word& w, std::span<const Scalar> z) {
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    ShapePlan<Scalar> plan;
    plan.shape = encoded_shape(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (is_left(w[k])) {
            plan.x.push_back(z[k]);
            plan.left.push_back(w[k]);
        }
    }
    for (std::size_t k = w.size(); k-- > 0;) {
        if (!is_left(w[k])) {
            plan.y.push_back(z[k]);
            plan.right.push_back(w[k]);
        }
    }
    plan.boundary = boundary_points(w);
    return plan;
}

template <class Scalar>
ShapePlan<Scalar> precompute_par(const Word& w, const std::vector<Scalar>& z) {
    return precompute_par<Scalar>(w, std::span<const Scalar>(z));
}

// z_i = q^{-i} for left symbols, q^{i} for right symbols (1-based i).
std::vector<double> q_volume_parameters(const Word& w, double q);

// Right-free half word: z_i = q^{n-i+1} for lefts, q^{-(n-i+1)} for rights,
// so that ∏ z_i^{||λ(i)|−|λ(i−1)||} = q^{Σ_{i≥1} |λ(i)|}.
std::vector<double> symmetric_q_volume_parameters(const Word& w, double q);

// (w·w*, Z·Zʳ) with w* reversed and each symbol inverted.
template <class Scalar>
std::pair<Word, std::vector<Scalar>> symmetrize(const Word& w, std::span<const Scalar> z) {
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    std::vector<Relation> s(w.begin(), w.end());
    std::vector<Scalar> zz(z.begin(), z.end());
    for (std::size_t k = w.size(); k-- > 0;) {
        s.push_back(invert(w[k]));
        zz.push_back(z[k]);
    }
    return {Word(std::move(s)), std::move(zz)};
}

// Parses "1/2", "0.25", "3" as doubles.
double parse_real(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

}  // namespace schur
