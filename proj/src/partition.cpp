#include "schur/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    trim();
}

Partition Partition::from_trusted(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.trim();
    return p;
}

void Partition::trim() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    weight_ = 0;
    for (int v : parts_) weight_ += v;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    // column c has length #{rows with part ≥ c}
    std::size_t row = lambda.length();
    for (int c = 1; c <= lambda.largest(); ++c) {
        while (row > 0 && lambda.part(row) < c) --row;
        out[static_cast<std::size_t>(c - 1)] = static_cast<int>(row);
    }
    return Partition::from_trusted(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

namespace {

// λ/μ horizontal strip: λ_i ≥ μ_i ≥ λ_{i+1}.
bool horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    if (lambda.length() > mu.length() + 1) return false;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        int m = mu.part(i);
        if (m > lambda.part(i) || m < lambda.part(i + 1)) return false;
    }
    return true;
}

bool vertical_strip(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        int d = lambda.part(i) - mu.part(i);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

}  // namespace

bool interlaces(const Partition& lambda, const Partition& mu, Relation rel) {
    switch (rel) {
        case Relation::RH: return horizontal_strip(lambda, mu);
        case Relation::LH: return horizontal_strip(mu, lambda);
        case Relation::RV: return vertical_strip(lambda, mu);
        case Relation::LV: return vertical_strip(mu, lambda);
    }
    return false;
}

bool all_parts_even(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(), [](int v) { return v % 2 == 0; });
}

bool all_columns_even(const Partition& lambda) {
    // conjugate even ⟺ λ_{2k-1} = λ_{2k} for all k
    if (lambda.length() % 2 != 0) return false;
    for (std::size_t i = 1; i <= lambda.length(); i += 2)
        if (lambda.part(i) != lambda.part(i + 1)) return false;
    return true;
}

std::string to_string(const Partition& lambda) {
    std::string s = "(";
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(lambda.part(i));
    }
    return s + ")";
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_trusted(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ps = partitions_of(n);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

MayaWindow to_maya(const Partition& lambda, long shift, long lo, long hi) {
    if (hi <= lo) throw std::invalid_argument("empty Maya window");
    // Non-vacuum cells live in [shift - ℓ, shift + λ1) in integer-cell terms.
    long need_lo = shift - static_cast<long>(lambda.length());
    long need_hi = shift + lambda.largest();
    if (lo > need_lo || hi < need_hi) throw std::out_of_range("Maya window truncates the diagram");
    MayaWindow w;
    w.offset2 = 2 * lo + 1;
    w.cells.assign(static_cast<std::size_t>(hi - lo), MayaCell::hole);
    // cell index c ↔ position c + 1/2; particle i at λ_i - i + shift (integer part)
    for (long c = lo; c < hi && c < shift - static_cast<long>(lambda.length()); ++c)
        w.cells[static_cast<std::size_t>(c - lo)] = MayaCell::particle;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        long c = lambda.part(i) - static_cast<long>(i) + shift;
        w.cells[static_cast<std::size_t>(c - lo)] = MayaCell::particle;
    }
    return w;
}

MayaDecoded from_maya(const MayaWindow& window) {
    if (window.offset2 % 2 == 0) throw std::invalid_argument("Maya offset must be a half-integer");
    long lo = (window.offset2 - 1) / 2;
    std::vector<int> parts;
    // part of a particle = holes to its left; scan right to left so parts come out decreasing
    std::vector<long> hole_prefix(window.cells.size() + 1, 0);
    for (std::size_t k = 0; k < window.cells.size(); ++k)
        hole_prefix[k + 1] = hole_prefix[k] + (window.cells[k] == MayaCell::hole ? 1 : 0);
    for (std::size_t k = window.cells.size(); k-- > 0;) {
        if (window.cells[k] == MayaCell::particle) {
            long h = hole_prefix[k];
            if (h == 0) break;
            parts.push_back(static_cast<int>(h));
        }
    }
    // the charge is fixed by how many particles sit inside the window
    long total_particles = 0;
    for (auto c : window.cells) total_particles += (c == MayaCell::particle ? 1 : 0);
    MayaDecoded d;
    d.partition = Partition::from_trusted(std::move(parts));
    d.shift = lo + total_particles;
    return d;
}

}  // namespace schur
