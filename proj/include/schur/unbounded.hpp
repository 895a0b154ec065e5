#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/partition.hpp"
#include "schur/random.hpp"
#include "schur/word.hpp"

namespace schur {

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t k);

// a_i, b_j for i, j ≥ 0; either finite lists (zero beyond) or geometric families.
class ParameterSequences {
public:
    static ParameterSequences finite(std::vector<double> a, std::vector<double> b);
    // a_i = a0·ra^i, b_j = b0·rb^j with 0 ≤ ra, rb < 1
    static ParameterSequences geometric(double a0, double ra, double b0, double rb);
    // a_i = b_i = q^{i+1/2}
    static ParameterSequences q_volume(double q);

    double a(std::uint64_t i) const;
    double b(std::uint64_t j) const;
    double a_max() const { return a_sup_; }
    double b_max() const { return b_sup_; }
    // upper bound on Σ_{i+j ≥ d} a_i b_j
    double diagonal_tail(std::uint64_t d) const;

private:
    double a_tail(std::uint64_t h) const;  // Σ_{i ≥ h} a_i
    double b_tail(std::uint64_t h) const;

    bool geometric_ = false;
    std::vector<double> a_, b_;
    std::vector<double> a_suffix_, b_suffix_;
    double a0_ = 0, ra_ = 0, b0_ = 0, rb_ = 0;
    double a_sup_ = 0, b_sup_ = 0;
};

// Primed flags for the left symbol w_{-i} (relating λ(-i-1), λ(-i)) and the right symbol w_{j+1}.
struct WordConvention {
    std::function<bool(std::uint64_t)> left_primed;
    std::function<bool(std::uint64_t)> right_primed;
    std::string name;

    static WordConvention all_unprimed();
    // pyramid partitions: w_0 = ≺′, w_{-1} = ≺, …; w_1 = ≻, w_2 = ≻′, …
    static WordConvention alternating();

    Relation left(std::uint64_t i) const { return make_relation(true, left_primed(i)); }
    Relation right(std::uint64_t j) const { return make_relation(false, right_primed(j)); }
    BoxType type(std::uint64_t i, std::uint64_t j) const { return box_type(left(i), right(j)); }
    int sign(std::uint64_t i, std::uint64_t j) const { return pair_sign(left(i), right(j)); }
};

// c_{i,j} = a_i b_j if ε = −1, a_i b_j / (1 + a_i b_j) if ε = +1.
double box_parameter(const ParameterSequences& p, const WordConvention& c, std::uint64_t i, std::uint64_t j);

// Samples K = sup{k(i,j) : U_{i,j} > 0}; nullopt stands for −∞. Keeps its prefix sums between calls.
class TruncationSampler {
public:
    TruncationSampler(ParameterSequences params, WordConvention conv);
    std::optional<std::uint64_t> operator()(RandomSource& src);
    // certified interval for P(K = −∞)
    std::pair<double, double> empty_probability_bounds(double rel_width = 1e-13);

    const ParameterSequences& params() const { return params_; }
    const WordConvention& convention() const { return conv_; }

private:
    void extend(std::uint64_t diagonals);
    long double tail_bound() const;

    ParameterSequences params_;
    WordConvention conv_;
    std::vector<long double> prefix_;  // prefix_[k] = Σ_{k' < k} −log(1 − c_{k'})
    std::uint64_t diagonals_ = 0;      // prefix covers diagonals 0..diagonals_-1
    double c_cap_ = 0;
};

std::optional<std::uint64_t> sample_truncation_index(const ParameterSequences& p, const WordConvention& c,
                                                     RandomSource& src);

struct PyramidalSample {
    long min_index = 0;
    std::vector<Partition> lambdas;  // λ(min_index), λ(min_index+1), …

    const Partition& at(long i) const;
    long max_index() const { return min_index + static_cast<long>(lambdas.size()) - 1; }
    bool all_empty() const;
};

void validate_pyramidal(const PyramidalSample& s, const WordConvention& c);

struct UnboundedRun {
    PyramidalSample sample;
    std::optional<std::uint64_t> K;
    // inputs[i][j] for i + j ≤ n0
    std::vector<std::vector<long>> inputs;
    std::uint64_t cost = 0;
};

UnboundedRun unbounded_schur_run(TruncationSampler& trunc, RandomSource& src);
PyramidalSample unbounded_schur_sample(const ParameterSequences& p, const WordConvention& c, RandomSource& src);

enum class AccumulationOrder : std::uint8_t { cantor, diagonal_reversed };

struct PyramidalZ {
    double value = 1.0;
    double log_value = 0.0;
    double rel_error_bound = 0.0;
    std::uint64_t diagonals = 0;
};

// ∏_{i,j≥0} (1 + ε a_i b_j)^ε with certified relative error ≤ rel_tol.
PyramidalZ z_pyramidal(const ParameterSequences& p, const WordConvention& c, double rel_tol,
                       AccumulationOrder order = AccumulationOrder::cantor);

}  // namespace schur
