#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "schur/partition.hpp"
#include "schur/random.hpp"
#include "schur/word.hpp"

namespace schur {

enum class BoundaryMode : std::uint8_t { free, even_rows, even_columns };

std::string_view to_string(BoundaryMode m);
BoundaryMode parse_boundary_mode(std::string_view text);  // "free", "even-rows", "even_rows", …

bool satisfies_mode(const Partition& lambda, BoundaryMode mode);

struct SymmetricSample {
    Word word;  // the half word w
    std::vector<double> z;
    double t = 1.0;
    BoundaryMode mode = BoundaryMode::free;
    std::uint64_t seed = 0;
    std::vector<Partition> lambdas;  // length 2|w|+1, palindromic
};

// Throws std::invalid_argument on a broken palindrome, mode constraint or interlacing.
void validate_symmetric(const SymmetricSample& s);

struct SymmetricStats {
    EntropyLedger ledger;
    std::uint64_t cost = 0;
    std::size_t stored_boxes = 0;
};

SymmetricSample symmetric_schur_sample(const Word& w, std::span<const double> z, double t, BoundaryMode mode,
                                       RandomSource& src, SymmetricStats* stats = nullptr);

// t^{|λ(n)|} ∏_{i≤n} z_i^{||λ(i)|−|λ(i−1)||}
template <class Scalar>
Scalar symmetric_weight(const Word& w, std::span<const Scalar> z, const Scalar& t,
                        const std::vector<Partition>& lambdas) {
    auto pw = [](Scalar b, long e) {
        Scalar r(1);
        for (long k = 0; k < e; ++k) r *= b;
        return r;
    };
    Scalar out(1);
    for (std::size_t i = 1; i <= w.size(); ++i) {
        long d = lambdas[i].weight() - lambdas[i - 1].weight();
        out *= pw(z[i - 1], d < 0 ? -d : d);
    }
    out *= pw(t, lambdas[w.size()].weight());
    return out;
}

}  // namespace schur
