#include "schur/symmetric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "schur/growth.hpp"
#include "schur/local_rules.hpp"

namespace schur {

std::string_view to_string(BoundaryMode m) {
    switch (m) {
        case BoundaryMode::free: return "free";
        case BoundaryMode::even_rows: return "even-rows";
        case BoundaryMode::even_columns: return "even-columns";
    }
    return "?";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
    if (text == "free") return BoundaryMode::free;
    if (text == "even-rows" || text == "even_rows") return BoundaryMode::even_rows;
    if (text == "even-columns" || text == "even_columns") return BoundaryMode::even_columns;
    throw std::invalid_argument("unknown boundary mode '" + std::string(text) + "'");
}

bool satisfies_mode(const Partition& lambda, BoundaryMode mode) {
    switch (mode) {
        case BoundaryMode::free: return true;
        case BoundaryMode::even_rows: return all_parts_even(lambda);
        case BoundaryMode::even_columns: return all_columns_even(lambda);
    }
    return false;
}

void validate_symmetric(const SymmetricSample& s) {
    std::size_t n = s.word.size();
    if (s.lambdas.size() != 2 * n + 1) throw std::invalid_argument("symmetric sample must hold 2|w|+1 partitions");
    if (!s.lambdas.front().empty()) throw std::invalid_argument("symmetric sample must start empty");
    for (std::size_t i = 0; i <= 2 * n; ++i)
        if (s.lambdas[i] != s.lambdas[2 * n - i]) throw std::invalid_argument("symmetric sample is not a palindrome");
    for (std::size_t k = 1; k <= n; ++k)
        if (!interlaces(s.lambdas[k - 1], s.lambdas[k], s.word.at(k)))
            throw std::invalid_argument("symmetric sample breaks interlacing at position " + std::to_string(k));
    if (!satisfies_mode(s.lambdas[n], s.mode))
        throw std::invalid_argument("free partition violates the boundary mode");
}

namespace {

// Upper triangle j ≥ i of a self-conjugate shape; row j keeps i = 0..min(j, π_j).
class Triangle {
public:
    Triangle(const Partition& shape, int n) : rows_(static_cast<std::size_t>(n) + 1) {
        rows_[0].resize(1);
        for (int j = 1; j <= n; ++j)
            rows_[static_cast<std::size_t>(j)].resize(
                static_cast<std::size_t>(std::min(j, shape.part(static_cast<std::size_t>(j)))) + 1);
    }
    const Partition& get(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i == 0) return empty_;
        return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    void set(int i, int j, Partition p) { rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(p); }
    std::size_t stored() const {
        std::size_t c = 0;
        for (auto& r : rows_) c += r.size() - 1;
        return c;
    }

private:
    std::vector<std::vector<Partition>> rows_;
    Partition empty_;
};

[[noreturn]] void diverge(int i, int j, double v) {
    std::ostringstream os;
    os << "divergent parameters at box (" << i << "," << j << "): " << v << " >= 1";
    throw std::domain_error(os.str());
}

}  // namespace

SymmetricSample symmetric_schur_sample(const Word& w, std::span<const double> z, double t, BoundaryMode mode,
                                       RandomSource& src, SymmetricStats* stats) {
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    for (double v : z)
        if (!(v >= 0.0)) throw std::domain_error("parameters must be nonnegative");
    // fold t into the parameters: z̄ = t^{±1} z
    std::vector<double> zbar(z.begin(), z.end());
    for (std::size_t k = 0; k < w.size(); ++k) zbar[k] = is_left(w[k]) ? t * z[k] : z[k] / t;
    auto [wsym, zsym] = symmetrize<double>(w, zbar);
    auto plan = precompute_par<double>(wsym, zsym);
    int n = plan.columns();

    // divergence check before any draw
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= std::min(j, plan.shape.part(static_cast<std::size_t>(j))); ++i) {
            if (i < j) {
                if (!is_dual(plan.type(i, j)) && !(plan.xi(i, j) < 1.0)) diverge(i, j, plan.xi(i, j));
                continue;
            }
            bool vv = is_primed(plan.left[static_cast<std::size_t>(i - 1)]);
            double x = plan.x[static_cast<std::size_t>(i - 1)];
            bool random = mode == BoundaryMode::free || (mode == BoundaryMode::even_rows) != vv;
            double xi = mode == BoundaryMode::free ? x : x * x;
            if (random && !(xi < 1.0)) diverge(i, i, xi);
        }

    Triangle tri(plan.shape, n);
    EntropyLedger ledger;
    std::uint64_t cost = 0;
    for (int j = 1; j <= n; ++j) {
        int len = std::min(j, plan.shape.part(static_cast<std::size_t>(j)));
        for (int i = 1; i <= len; ++i) {
            if (i < j) {
                BoxType type = plan.type(i, j);
                double xi = plan.xi(i, j);
                long r;
                ledger.parameters.push_back(xi);
                if (is_dual(type)) {
                    ++ledger.bernoulli_draws;
                    r = bernoulli(xi / (1.0 + xi), src);
                } else {
                    ++ledger.geometric_draws;
                    r = geometric(xi, src);
                }
                tri.set(i, j, kernel::grow(type, tri.get(i - 1, j), tri.get(i, j - 1), tri.get(i - 1, j - 1), r, cost));
                continue;
            }
            const Partition& mu = tri.get(i - 1, i);
            const Partition& kappa = tri.get(i - 1, i - 1);
            bool vv = is_primed(plan.left[static_cast<std::size_t>(i - 1)]);
            double x = plan.x[static_cast<std::size_t>(i - 1)];
            auto geom = [&](double xi) {
                ++ledger.geometric_draws;
                ledger.parameters.push_back(xi);
                return geometric(xi, src);
            };
            Partition nu;
            if (!vv) {
                switch (mode) {
                    case BoundaryMode::free: nu = kernel::diag_h(mu, kappa, geom(x), cost); break;
                    case BoundaryMode::even_rows: nu = kernel::diag_h_er(mu, kappa, geom(x * x), cost); break;
                    case BoundaryMode::even_columns: nu = kernel::diag_h_ec(mu, kappa, cost); break;
                }
            } else {
                Partition mc = conjugate(mu);
                Partition kc = conjugate(kappa);
                switch (mode) {
                    case BoundaryMode::free: nu = conjugate(kernel::diag_h(mc, kc, geom(x), cost)); break;
                    case BoundaryMode::even_rows: nu = conjugate(kernel::diag_h_ec(mc, kc, cost)); break;
                    case BoundaryMode::even_columns:
                        nu = conjugate(kernel::diag_h_er(mc, kc, geom(x * x), cost));
                        break;
                }
            }
            tri.set(i, i, std::move(nu));
        }
    }

    SymmetricSample out{w, std::vector<double>(z.begin(), z.end()), t, mode, src.seed(), {}};
    out.lambdas.reserve(plan.boundary.size());
    for (auto [i, j] : plan.boundary) out.lambdas.push_back(tri.get(i, j));
    if (stats) {
        stats->ledger = std::move(ledger);
        stats->cost = cost;
        stats->stored_boxes = tri.stored();
    }
    return out;
}

}  // namespace schur
