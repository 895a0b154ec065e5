#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schur/partition.hpp"
#include "schur/symmetric.hpp"
#include "schur/word.hpp"

namespace schur::oracle {

using Sequence = std::vector<Partition>;

// Strip generators written directly from the interlacing definitions.
std::vector<Partition> add_horizontal_strips(const Partition& mu, long cap);
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);
std::vector<Partition> add_vertical_strips(const Partition& mu, long cap);
std::vector<Partition> remove_vertical_strips(const Partition& lambda);
// All ν with λ rel ν and |ν| ≤ cap.
std::vector<Partition> successors(const Partition& lambda, Relation rel, long cap);

// ∏ z_k^{||λ(k)|−|λ(k−1)||}, times t^{|λ(n)|} for the symmetric form.
mpq_class sequence_weight(const Word& w, std::span<const mpq_class> z, const Sequence& seq);
mpq_class symmetric_sequence_weight(const Word& w, std::span<const mpq_class> z, const mpq_class& t,
                                    const Sequence& half);

struct WeightedSupport {
    std::map<Sequence, mpq_class> entries;
    long cap = 0;
    bool divergent = false;      // some geometric box has parameter ≥ 1
    mpq_class tail_probability;  // upper bound on the omitted share of the mass
    mpq_class tail_bound;        // upper bound on the omitted weight

    mpq_class total() const;
    bool complete() const { return !divergent && tail_bound == 0; }
};

inline constexpr std::size_t default_entry_limit = 2'000'000;

// Throws std::length_error past entry_limit.
WeightedSupport enumerate_support(const Word& w, std::span<const mpq_class> z, long cap,
                                  std::size_t entry_limit = default_entry_limit);
// Keys are the half sequences λ(0..n); λ(n) obeys the mode.
WeightedSupport enumerate_symmetric_support(const Word& w, std::span<const mpq_class> z, const mpq_class& t,
                                            BoundaryMode mode, long cap,
                                            std::size_t entry_limit = default_entry_limit);

// weight / Σ weights; throws std::invalid_argument when the sequence is not enumerated.
mpq_class exact_probability(const Sequence& seq, const WeightedSupport& support);

struct Histogram {
    std::map<Sequence, std::uint64_t> counts;
    std::uint64_t overflow = 0;  // samples outside the enumerated support
    std::uint64_t total = 0;
    void add(const Sequence& s, const WeightedSupport& support);
};

// ½ Σ |p̂ − p| + overflow share, against the support normalized by its enumerated total.
double tv_distance(const Histogram& h, const WeightedSupport& support);

// E[tv_distance] for n exact draws from the normalized support: the noise floor of the estimator.
double expected_null_tv(const WeightedSupport& support, std::uint64_t n);

struct ChiSquare {
    double statistic = 0;
    int dof = 0;
    double p_value = 1;
};
// Cells with expected count < min_expected are pooled into one cell together with the leftover mass.
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> probabilities,
                     std::uint64_t overflow = 0, double min_expected = 5.0);
ChiSquare chi_square(const Histogram& h, const WeightedSupport& support, double min_expected = 5.0);

struct RuleReport {
    std::string rule;
    std::uint64_t cases = 0;
    std::vector<std::string> counterexamples;
};

struct BijectionReport {
    std::vector<RuleReport> rules;
    std::uint64_t interleave_checks = 0;
    bool ok() const;
    std::string summary() const;
};

// Exhaustive injectivity, surjectivity, inverse and weight checks of every local rule
// over |λ|, |μ|, |κ| ≤ max_weight.
BijectionReport verify_bijections(int max_weight, std::size_t max_counterexamples = 20);

// Number of standard Young tableaux of shape λ.
mpz_class hook_length_f(const Partition& lambda);
// e^{−θ} θ^n (f^λ / n!)²
double plancherel_probability(const Partition& lambda, double theta);

}  // namespace schur::oracle
