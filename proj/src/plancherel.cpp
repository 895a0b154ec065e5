#include "schur/plancherel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "schur/local_rules.hpp"

namespace schur {

namespace {

void shuffle(std::vector<int>& v, RandomSource& src) {
    for (std::size_t k = v.size(); k > 1; --k) {
        auto r = static_cast<std::size_t>(uniform_below(k, src));
        std::swap(v[k - 1], v[r]);
    }
}

}  // namespace

Partition grow_point_configuration(std::span<const int> row_of_column, int row_count) {
    // sweep columns; line[j] = τ(c, j) for the current column c
    std::vector<Partition> line(static_cast<std::size_t>(row_count) + 1);
    std::uint64_t cost = 0;
    for (int r : row_of_column) {
        if (r < 1 || r > row_count) throw std::out_of_range("point row outside the grid");
        Partition below;  // τ(c, 0)
        Partition diag;   // τ(c-1, j-1)
        for (int j = 1; j <= row_count; ++j) {
            Partition left = line[static_cast<std::size_t>(j)];  // τ(c-1, j)
            Partition up = kernel::hh(left, below, diag, r == j ? 1 : 0, cost);
            diag = std::move(left);
            line[static_cast<std::size_t>(j)] = up;
            below = std::move(up);
        }
    }
    return line.back();
}

Partition plancherel_sample(double theta, RandomSource& src) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw std::domain_error("theta must be positive and finite");
    long n = poisson(theta, src);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = static_cast<int>(k + 1);
    shuffle(perm, src);
    return grow_point_configuration(perm, static_cast<int>(n));
}

Partition mixed_plancherel_sample(double a, std::span<const double> b, RandomSource& src) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw std::domain_error("a must be finite and nonnegative");
    double total = 0.0;
    for (double v : b) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::domain_error("b must be finite and nonnegative");
        total += v;
    }
    if (!std::isfinite(a * total)) throw std::domain_error("divergent parameters: a·Σb is not finite");
    std::vector<int> rows;
    for (std::size_t i = 0; i < b.size(); ++i) {
        long count = poisson(a * b[i], src);
        rows.insert(rows.end(), static_cast<std::size_t>(count), static_cast<int>(i + 1));
    }
    // uniform time order = uniform shuffle of the multiset of line labels
    shuffle(rows, src);
    return grow_point_configuration(rows, static_cast<int>(b.size()));
}

}  // namespace schur
