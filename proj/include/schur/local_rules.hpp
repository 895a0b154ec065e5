#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schur/partition.hpp"
#include "schur/word.hpp"

namespace schur {

// Public entry points validate their interlacing preconditions and throw
// std::invalid_argument on violation.

Partition grow_hh(const Partition& lambda, const Partition& mu, const Partition& kappa, long g);
Partition grow_vv(const Partition& lambda, const Partition& mu, const Partition& kappa, long g);
// pre: λ ≻′ κ, μ ≻ κ, b ∈ {0,1}
Partition grow_hv(const Partition& lambda, const Partition& mu, const Partition& kappa, long b);
// pre: λ ≻ κ, μ ≻′ κ; equals grow_hv(μ, λ, κ, b)
Partition grow_vh(const Partition& lambda, const Partition& mu, const Partition& kappa, long b);

Partition grow(BoxType type, const Partition& lambda, const Partition& mu, const Partition& kappa, long rand);

struct Preimage {
    Partition kappa;
    long rand = 0;
    friend bool operator==(const Preimage&, const Preimage&) = default;
};

// Inverse of grow(type, λ, μ, ·, ·) at ν. Throws std::invalid_argument when ν has no preimage.
Preimage shrink(BoxType type, const Partition& lambda, const Partition& nu, const Partition& mu);

// Diagonal rules for free boundaries. "_er" outputs have even rows, "_ec" even columns.
Partition grow_diag_h(const Partition& mu, const Partition& kappa, long g);
Partition grow_diag_h_er(const Partition& mu, const Partition& kappa, long g);
Partition grow_diag_h_ec(const Partition& mu, const Partition& kappa);
// Conjugated versions for VV diagonal boxes (μ ≻′ κ, output ν ≻′ μ).
Partition grow_diag_v(const Partition& mu, const Partition& kappa, long g);
Partition grow_diag_v_er(const Partition& mu, const Partition& kappa);
Partition grow_diag_v_ec(const Partition& mu, const Partition& kappa, long g);

Preimage shrink_diag_h(const Partition& mu, const Partition& nu);
Preimage shrink_diag_h_er(const Partition& mu, const Partition& nu);
Preimage shrink_diag_h_ec(const Partition& mu, const Partition& nu);

// Row indices (1-based) where the HV rule may add a box to ν (nu) and remove one from κ (kappa).
struct HvBlocks {
    std::vector<int> nu_positions;
    std::vector<int> kappa_positions;
};
HvBlocks hv_blocks(const Partition& lambda, const Partition& mu);
// j₁ ≤ i₁ < j₂ ≤ i₂ < … with one more ν-position than κ-positions.
bool blocks_interleave(const HvBlocks& blocks);

namespace kernel {
// Unchecked rules used by the samplers. `cost` accumulates candidate rows produced.
Partition hh(const Partition& lambda, const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost);
Partition vv(const Partition& lambda, const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost);
Partition hv(const Partition& lambda, const Partition& mu, const Partition& kappa, long b, std::uint64_t& cost);
Partition grow(BoxType type, const Partition& lambda, const Partition& mu, const Partition& kappa, long rand,
               std::uint64_t& cost);
Partition diag_h(const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost);
Partition diag_h_er(const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost);
Partition diag_h_ec(const Partition& mu, const Partition& kappa, std::uint64_t& cost);
}  // namespace kernel

}  // namespace schur
