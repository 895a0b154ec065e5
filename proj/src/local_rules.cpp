#include "schur/local_rules.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>
#include <string>

namespace schur {

namespace {

[[noreturn]] void reject(const char* op, const char* what) {
    throw std::invalid_argument(std::string(op) + ": " + what);
}

int ceil_half(int v) { return (v + 1) / 2; }
int floor_half(int v) { return v / 2; }

}  // namespace

namespace kernel {

Partition hh(const Partition& lambda, const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost) {
    std::size_t rows = std::max(lambda.length(), mu.length()) + 1;
    std::vector<int> nu(rows);
    nu[0] = std::max(lambda.part(1), mu.part(1)) + static_cast<int>(g);
    for (std::size_t i = 2; i <= rows; ++i)
        nu[i - 1] = std::max(lambda.part(i), mu.part(i)) + std::min(lambda.part(i - 1), mu.part(i - 1)) -
                    kappa.part(i - 1);
    cost += rows;
    Partition out = Partition::from_trusted(std::move(nu));
    assert(interlaces(out, lambda, Relation::RH) && interlaces(out, mu, Relation::RH));
    assert(out.weight() + kappa.weight() == lambda.weight() + mu.weight() + g);
    return out;
}

Partition vv(const Partition& lambda, const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost) {
    std::uint64_t inner = 0;
    Partition out = conjugate(hh(conjugate(lambda), conjugate(mu), conjugate(kappa), g, inner));
    cost += inner;
    assert(interlaces(out, lambda, Relation::RV) && interlaces(out, mu, Relation::RV));
    return out;
}

Partition hv(const Partition& lambda, const Partition& mu, const Partition& kappa, long b, std::uint64_t& cost) {
    std::size_t rows = std::max(lambda.length(), mu.length()) + 1;
    std::vector<int> nu(rows);
    long bit = b;
    for (std::size_t i = 1; i <= rows; ++i) {
        int li = lambda.part(i);
        int mi = mu.part(i);
        int lprev = i == 1 ? INT_MAX : lambda.part(i - 1);
        int hi = std::max(li, mi);
        // ν may gain a box in row i
        if (li <= mi && mi < lprev) {
            nu[i - 1] = hi + static_cast<int>(bit);
            bit = 0;
        } else {
            nu[i - 1] = hi;
        }
        // κ lost a box in row i: that bit moves down to the next ν-position
        if (mu.part(i + 1) < li && li <= mi) bit = std::min(li, mi) - kappa.part(i);
    }
    cost += rows;
    Partition out = Partition::from_trusted(std::move(nu));
    assert(blocks_interleave(hv_blocks(lambda, mu)));
    assert(interlaces(out, lambda, Relation::RH) && interlaces(out, mu, Relation::RV));
    assert(out.weight() + kappa.weight() == lambda.weight() + mu.weight() + b);
    return out;
}

Partition grow(BoxType type, const Partition& lambda, const Partition& mu, const Partition& kappa, long rand,
               std::uint64_t& cost) {
    switch (type) {
        case BoxType::HH: return hh(lambda, mu, kappa, rand, cost);
        case BoxType::VV: return vv(lambda, mu, kappa, rand, cost);
        case BoxType::HV: return hv(lambda, mu, kappa, rand, cost);
        case BoxType::VH: return hv(mu, lambda, kappa, rand, cost);
    }
    return {};
}

Partition diag_h(const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost) {
    std::size_t rows = mu.length() + 1;
    std::vector<int> nu(rows);
    nu[0] = mu.part(1) + static_cast<int>(g);
    for (std::size_t i = 2; i <= rows; ++i) nu[i - 1] = mu.part(i) + mu.part(i - 1) - kappa.part(i - 1);
    cost += rows;
    Partition out = Partition::from_trusted(std::move(nu));
    assert(interlaces(out, mu, Relation::RH));
    assert(out.weight() + kappa.weight() == 2 * mu.weight() + g);
    return out;
}

Partition diag_h_er(const Partition& mu, const Partition& kappa, long g, std::uint64_t& cost) {
    std::size_t rows = mu.length() + 1;
    std::vector<int> nu(rows);
    nu[0] = 2 * ceil_half(mu.part(1)) + 2 * static_cast<int>(g);
    for (std::size_t i = 2; i <= rows; ++i)
        nu[i - 1] = 2 * ceil_half(mu.part(i)) + 2 * floor_half(mu.part(i - 1)) - kappa.part(i - 1);
    cost += rows;
    Partition out = Partition::from_trusted(std::move(nu));
    assert(all_parts_even(out) && interlaces(out, mu, Relation::RH));
    assert(out.weight() + kappa.weight() == 2 * mu.weight() + 2 * g);
    return out;
}

Partition diag_h_ec(const Partition& mu, const Partition& kappa, std::uint64_t& cost) {
    std::size_t rows = mu.length() + 1;
    std::vector<int> nu(rows);
    nu[0] = mu.part(1);
    for (std::size_t i = 2; i <= rows; ++i) nu[i - 1] = mu.part(i) + mu.part(i - 1) - kappa.part(i - 1);
    cost += rows;
    Partition out = Partition::from_trusted(std::move(nu));
    assert(all_columns_even(out) && interlaces(out, mu, Relation::RH));
    assert(out.weight() + kappa.weight() == 2 * mu.weight());
    return out;
}

}  // namespace kernel

Partition grow_hh(const Partition& lambda, const Partition& mu, const Partition& kappa, long g) {
    if (g < 0) reject("grow_hh", "negative input");
    if (!interlaces(lambda, kappa, Relation::RH)) reject("grow_hh", "precondition λ ≻ κ violated");
    if (!interlaces(mu, kappa, Relation::RH)) reject("grow_hh", "precondition μ ≻ κ violated");
    std::uint64_t c = 0;
    return kernel::hh(lambda, mu, kappa, g, c);
}

Partition grow_vv(const Partition& lambda, const Partition& mu, const Partition& kappa, long g) {
    if (g < 0) reject("grow_vv", "negative input");
    if (!interlaces(lambda, kappa, Relation::RV)) reject("grow_vv", "precondition λ ≻′ κ violated");
    if (!interlaces(mu, kappa, Relation::RV)) reject("grow_vv", "precondition μ ≻′ κ violated");
    std::uint64_t c = 0;
    return kernel::vv(lambda, mu, kappa, g, c);
}

Partition grow_hv(const Partition& lambda, const Partition& mu, const Partition& kappa, long b) {
    if (b < 0 || b > 1) reject("grow_hv", "input bit must be 0 or 1");
    if (!interlaces(lambda, kappa, Relation::RV)) reject("grow_hv", "precondition λ ≻′ κ violated");
    if (!interlaces(mu, kappa, Relation::RH)) reject("grow_hv", "precondition μ ≻ κ violated");
    std::uint64_t c = 0;
    return kernel::hv(lambda, mu, kappa, b, c);
}

Partition grow_vh(const Partition& lambda, const Partition& mu, const Partition& kappa, long b) {
    if (b < 0 || b > 1) reject("grow_vh", "input bit must be 0 or 1");
    if (!interlaces(lambda, kappa, Relation::RH)) reject("grow_vh", "precondition λ ≻ κ violated");
    if (!interlaces(mu, kappa, Relation::RV)) reject("grow_vh", "precondition μ ≻′ κ violated");
    std::uint64_t c = 0;
    return kernel::hv(mu, lambda, kappa, b, c);
}

Partition grow(BoxType type, const Partition& lambda, const Partition& mu, const Partition& kappa, long rand) {
    switch (type) {
        case BoxType::HH: return grow_hh(lambda, mu, kappa, rand);
        case BoxType::VV: return grow_vv(lambda, mu, kappa, rand);
        case BoxType::HV: return grow_hv(lambda, mu, kappa, rand);
        case BoxType::VH: return grow_vh(lambda, mu, kappa, rand);
    }
    return {};
}

namespace {

Preimage shrink_hh_raw(const Partition& lambda, const Partition& nu, const Partition& mu) {
    long g = nu.part(1) - std::max(lambda.part(1), mu.part(1));
    if (g < 0) reject("shrink", "no preimage");
    std::size_t rows = std::max(lambda.length(), mu.length());
    std::vector<int> kappa(rows);
    for (std::size_t i = 2; i <= rows + 1; ++i)
        kappa[i - 2] = std::max(lambda.part(i), mu.part(i)) + std::min(lambda.part(i - 1), mu.part(i - 1)) -
                       nu.part(i);
    return {Partition(std::move(kappa)), g};
}

Preimage shrink_hv_raw(const Partition& lambda, const Partition& nu, const Partition& mu) {
    std::size_t rows = std::max(lambda.length(), mu.length()) + 1;
    if (nu.length() > rows) reject("shrink", "no preimage");
    std::vector<int> kappa(rows);
    std::vector<std::size_t> nu_pos;
    std::vector<long> bits;
    for (std::size_t i = 1; i <= rows; ++i) {
        int li = lambda.part(i);
        int mi = mu.part(i);
        int lprev = i == 1 ? INT_MAX : lambda.part(i - 1);
        int d = nu.part(i) - std::max(li, mi);
        if (li <= mi && mi < lprev) {
            if (d < 0 || d > 1) reject("shrink", "no preimage");
            nu_pos.push_back(i);
            bits.push_back(d);
        } else if (d != 0) {
            reject("shrink", "no preimage");
        }
    }
    if (bits.empty()) reject("shrink", "no preimage");
    std::size_t t = 0;
    for (std::size_t i = 1; i <= rows; ++i) {
        int li = lambda.part(i);
        int mi = mu.part(i);
        int lo = std::min(li, mi);
        kappa[i - 1] = lo;
        if (mu.part(i + 1) < li && li <= mi) {
            // the κ-position after ν-position t receives bit t+1
            while (t < nu_pos.size() && nu_pos[t] <= i) ++t;
            if (t >= nu_pos.size()) reject("shrink", "no preimage");
            kappa[i - 1] = lo - static_cast<int>(bits[t]);
        }
    }
    return {Partition(std::move(kappa)), bits.front()};
}

}  // namespace

Preimage shrink(BoxType type, const Partition& lambda, const Partition& nu, const Partition& mu) {
    Preimage p;
    switch (type) {
        case BoxType::HH: p = shrink_hh_raw(lambda, nu, mu); break;
        case BoxType::VV: {
            Preimage c = shrink_hh_raw(conjugate(lambda), conjugate(nu), conjugate(mu));
            p = {conjugate(c.kappa), c.rand};
            break;
        }
        case BoxType::HV: p = shrink_hv_raw(lambda, nu, mu); break;
        case BoxType::VH: p = shrink_hv_raw(mu, nu, lambda); break;
    }
    // preimage must satisfy the input-side relations and grow back to ν
    if (grow(type, lambda, mu, p.kappa, p.rand) != nu) reject("shrink", "no preimage");
    return p;
}

Partition grow_diag_h(const Partition& mu, const Partition& kappa, long g) {
    if (g < 0) reject("grow_diag_h", "negative input");
    if (!interlaces(mu, kappa, Relation::RH)) reject("grow_diag_h", "precondition μ ≻ κ violated");
    std::uint64_t c = 0;
    return kernel::diag_h(mu, kappa, g, c);
}

Partition grow_diag_h_er(const Partition& mu, const Partition& kappa, long g) {
    if (g < 0) reject("grow_diag_h_er", "negative input");
    if (!interlaces(mu, kappa, Relation::RH)) reject("grow_diag_h_er", "precondition μ ≻ κ violated");
    if (!all_parts_even(kappa)) reject("grow_diag_h_er", "κ must have even rows");
    std::uint64_t c = 0;
    return kernel::diag_h_er(mu, kappa, g, c);
}

Partition grow_diag_h_ec(const Partition& mu, const Partition& kappa) {
    if (!interlaces(mu, kappa, Relation::RH)) reject("grow_diag_h_ec", "precondition μ ≻ κ violated");
    if (!all_columns_even(kappa)) reject("grow_diag_h_ec", "κ must have even columns");
    std::uint64_t c = 0;
    return kernel::diag_h_ec(mu, kappa, c);
}

Partition grow_diag_v(const Partition& mu, const Partition& kappa, long g) {
    return conjugate(grow_diag_h(conjugate(mu), conjugate(kappa), g));
}

Partition grow_diag_v_er(const Partition& mu, const Partition& kappa) {
    return conjugate(grow_diag_h_ec(conjugate(mu), conjugate(kappa)));
}

Partition grow_diag_v_ec(const Partition& mu, const Partition& kappa, long g) {
    return conjugate(grow_diag_h_er(conjugate(mu), conjugate(kappa), g));
}

Preimage shrink_diag_h(const Partition& mu, const Partition& nu) {
    long g = nu.part(1) - mu.part(1);
    if (g < 0) reject("shrink_diag_h", "no preimage");
    std::size_t rows = mu.length();
    std::vector<int> kappa(rows);
    for (std::size_t i = 2; i <= rows + 1; ++i) kappa[i - 2] = mu.part(i) + mu.part(i - 1) - nu.part(i);
    Preimage p{Partition(std::move(kappa)), g};
    if (grow_diag_h(mu, p.kappa, g) != nu) reject("shrink_diag_h", "no preimage");
    return p;
}

Preimage shrink_diag_h_er(const Partition& mu, const Partition& nu) {
    long twice = nu.part(1) - 2 * ceil_half(mu.part(1));
    if (twice < 0 || twice % 2 != 0) reject("shrink_diag_h_er", "no preimage");
    std::size_t rows = mu.length();
    std::vector<int> kappa(rows);
    for (std::size_t i = 2; i <= rows + 1; ++i)
        kappa[i - 2] = 2 * ceil_half(mu.part(i)) + 2 * floor_half(mu.part(i - 1)) - nu.part(i);
    Preimage p{Partition(std::move(kappa)), twice / 2};
    if (grow_diag_h_er(mu, p.kappa, p.rand) != nu) reject("shrink_diag_h_er", "no preimage");
    return p;
}

Preimage shrink_diag_h_ec(const Partition& mu, const Partition& nu) {
    if (nu.part(1) != mu.part(1)) reject("shrink_diag_h_ec", "no preimage");
    std::size_t rows = mu.length();
    std::vector<int> kappa(rows);
    for (std::size_t i = 2; i <= rows + 1; ++i) kappa[i - 2] = mu.part(i) + mu.part(i - 1) - nu.part(i);
    Preimage p{Partition(std::move(kappa)), 0};
    if (grow_diag_h_ec(mu, p.kappa) != nu) reject("shrink_diag_h_ec", "no preimage");
    return p;
}

HvBlocks hv_blocks(const Partition& lambda, const Partition& mu) {
    HvBlocks b;
    std::size_t rows = std::max(lambda.length(), mu.length()) + 1;
    for (std::size_t i = 1; i <= rows; ++i) {
        int li = lambda.part(i);
        int mi = mu.part(i);
        int lprev = i == 1 ? INT_MAX : lambda.part(i - 1);
        if (li <= mi && mi < lprev) b.nu_positions.push_back(static_cast<int>(i));
        if (mu.part(i + 1) < li && li <= mi) b.kappa_positions.push_back(static_cast<int>(i));
    }
    return b;
}

bool blocks_interleave(const HvBlocks& blocks) {
    const auto& j = blocks.nu_positions;
    const auto& k = blocks.kappa_positions;
    if (j.size() != k.size() + 1) return false;
    for (std::size_t t = 0; t < k.size(); ++t)
        if (!(j[t] <= k[t] && k[t] < j[t + 1])) return false;
    return true;
}

}  // namespace schur
