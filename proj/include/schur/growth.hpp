#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "schur/partition.hpp"
#include "schur/random.hpp"
#include "schur/word.hpp"

namespace schur {

// Values on lattice points (i,j) of an encoded shape, axes included:
// 0 ≤ j ≤ rows, 0 ≤ i ≤ π_j, with π_0 taken as the column count. Rows past the
// length of the shape hold only their axis point.
template <class T>
class LatticeArray {
public:
    LatticeArray() = default;
    LatticeArray(const Partition& shape, int columns, int rows, const T& init = T{}) {
        if (rows < static_cast<int>(shape.length())) throw std::invalid_argument("fewer rows than the shape");
        start_.resize(static_cast<std::size_t>(rows) + 2, 0);
        for (int j = 0; j <= rows; ++j) {
            int len = (j == 0 ? columns : shape.part(static_cast<std::size_t>(j))) + 1;
            start_[static_cast<std::size_t>(j) + 1] = start_[static_cast<std::size_t>(j)] + static_cast<std::size_t>(len);
        }
        data_.assign(start_.back(), init);
    }

    int rows() const { return static_cast<int>(start_.size()) - 2; }
    int row_end(int j) const {
        return static_cast<int>(start_[static_cast<std::size_t>(j) + 1] - start_[static_cast<std::size_t>(j)]) - 1;
    }
    bool has(int i, int j) const { return j >= 0 && j <= rows() && i >= 0 && i <= row_end(j); }
    T& at(int i, int j) { return data_[index(i, j)]; }
    const T& at(int i, int j) const { return data_[index(i, j)]; }

    friend bool operator==(const LatticeArray&, const LatticeArray&) = default;

private:
    std::size_t index(int i, int j) const {
        if (!has(i, j)) throw std::out_of_range("lattice point outside the shape");
        return start_[static_cast<std::size_t>(j)] + static_cast<std::size_t>(i);
    }
    std::vector<std::size_t> start_;
    std::vector<T> data_;
};

using BoxInputs = LatticeArray<long>;

enum class TraversalOrder : std::uint8_t { row_major, diagonal };

struct GrowthGrid {
    ShapePlan<double> plan;
    LatticeArray<Partition> tau;
    BoxInputs inputs;

    // τ along the boundary path l_0, …, l_|w|
    std::vector<Partition> boundary() const;
};

struct ProcessSample {
    Word word;
    std::vector<double> z;
    std::uint64_t seed = 0;
    std::vector<Partition> lambdas;
};

// Throws std::invalid_argument if lengths, end points or interlacings are wrong.
void validate_sample(const ProcessSample& sample);

// Throws std::domain_error naming the first HH/VV box with x_i y_j ≥ 1, or any negative parameter.
void check_convergence(const ShapePlan<double>& plan);

// Draws every box input in row-major order.
BoxInputs draw_inputs(const ShapePlan<double>& plan, RandomSource& src, EntropyLedger* ledger = nullptr);

GrowthGrid fill_grid(const ShapePlan<double>& plan, const BoxInputs& inputs, TraversalOrder order,
                     std::uint64_t* cost = nullptr);

struct GrowthRun {
    GrowthGrid grid;
    ProcessSample sample;
    EntropyLedger ledger;
    std::uint64_t cost = 0;  // candidate rows produced by the local rules
};

GrowthRun schur_sample_run(const Word& w, std::span<const double> z, RandomSource& src,
                           TraversalOrder order = TraversalOrder::row_major);

ProcessSample schur_sample(const Word& w, std::span<const double> z, RandomSource& src,
                           TraversalOrder order = TraversalOrder::row_major);

struct BoundaryStats {
    std::size_t peak_live_partitions = 0;
    std::uint64_t cost = 0;
};

// Same output as schur_sample, keeping only one row of τ alive.
ProcessSample in_place_boundary_sample(const Word& w, std::span<const double> z, RandomSource& src,
                                       BoundaryStats* stats = nullptr);

// Box inputs that regenerate `sample`; throws std::invalid_argument if none exist.
BoxInputs reconstruct_inputs(const ProcessSample& sample);

// Row-major listing of box inputs.
std::vector<long> row_major_inputs(const BoxInputs& inputs, const Partition& shape);

}  // namespace schur
