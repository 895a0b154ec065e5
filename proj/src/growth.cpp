#include "schur/growth.hpp"

#include <algorithm>
#include <sstream>

#include "schur/local_rules.hpp"

namespace schur {

std::vector<Partition> GrowthGrid::boundary() const {
    std::vector<Partition> out;
    out.reserve(plan.boundary.size());
    for (auto [i, j] : plan.boundary) out.push_back(tau.at(i, j));
    return out;
}

void validate_sample(const ProcessSample& s) {
    if (s.lambdas.size() != s.word.size() + 1)
        throw std::invalid_argument("sample must hold |w|+1 partitions");
    if (!s.lambdas.front().empty() || !s.lambdas.back().empty())
        throw std::invalid_argument("sample must start and end with the empty partition");
    for (std::size_t k = 1; k <= s.word.size(); ++k)
        if (!interlaces(s.lambdas[k - 1], s.lambdas[k], s.word.at(k)))
            throw std::invalid_argument("partitions " + std::to_string(k - 1) + " and " + std::to_string(k) +
                                        " do not satisfy " + std::string(ascii(s.word.at(k))));
}

void check_convergence(const ShapePlan<double>& plan) {
    for (double v : plan.x)
        if (!(v >= 0.0)) throw std::domain_error("parameters must be nonnegative");
    for (double v : plan.y)
        if (!(v >= 0.0)) throw std::domain_error("parameters must be nonnegative");
    for (int j = 1; j <= plan.rows(); ++j)
        for (int i = 1; i <= plan.shape.part(static_cast<std::size_t>(j)); ++i) {
            BoxType t = plan.type(i, j);
            double xi = plan.xi(i, j);
            if (!is_dual(t) && !(xi < 1.0)) {
                std::ostringstream os;
                os << "divergent parameters at box (" << i << "," << j << "): x_i*y_j = " << xi << " >= 1";
                throw std::domain_error(os.str());
            }
        }
}

namespace {

long draw_box(BoxType t, double xi, RandomSource& src, EntropyLedger* ledger) {
    if (ledger) ledger->parameters.push_back(xi);
    if (is_dual(t)) {
        if (ledger) ++ledger->bernoulli_draws;
        return bernoulli(xi / (1.0 + xi), src);
    }
    if (ledger) ++ledger->geometric_draws;
    return geometric(xi, src);
}

}  // namespace

BoxInputs draw_inputs(const ShapePlan<double>& plan, RandomSource& src, EntropyLedger* ledger) {
    check_convergence(plan);
    BoxInputs in(plan.shape, plan.columns(), plan.rows(), 0);
    for (int j = 1; j <= plan.rows(); ++j)
        for (int i = 1; i <= plan.shape.part(static_cast<std::size_t>(j)); ++i)
            in.at(i, j) = draw_box(plan.type(i, j), plan.xi(i, j), src, ledger);
    return in;
}

GrowthGrid fill_grid(const ShapePlan<double>& plan, const BoxInputs& inputs, TraversalOrder order,
                     std::uint64_t* cost) {
    GrowthGrid g{plan, LatticeArray<Partition>(plan.shape, plan.columns(), plan.rows()), inputs};
    std::uint64_t c = 0;
    auto box = [&](int i, int j) {
        g.tau.at(i, j) = kernel::grow(plan.type(i, j), g.tau.at(i - 1, j), g.tau.at(i, j - 1),
                                      g.tau.at(i - 1, j - 1), inputs.at(i, j), c);
    };
    int m = plan.columns();
    int n = plan.rows();
    if (order == TraversalOrder::row_major) {
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= plan.shape.part(static_cast<std::size_t>(j)); ++i) box(i, j);
    } else {
        for (int d = 2; d <= m + n; ++d)
            for (int j = std::max(1, d - m); j <= std::min(n, d - 1); ++j)
                if (plan.contains(d - j, j)) box(d - j, j);
    }
    if (cost) *cost += c;
    return g;
}

GrowthRun schur_sample_run(const Word& w, std::span<const double> z, RandomSource& src, TraversalOrder order) {
    GrowthRun run;
    auto plan = precompute_par<double>(w, z);
    auto inputs = draw_inputs(plan, src, &run.ledger);
    run.grid = fill_grid(plan, inputs, order, &run.cost);
    run.sample = {w, std::vector<double>(z.begin(), z.end()), src.seed(), run.grid.boundary()};
    return run;
}

ProcessSample schur_sample(const Word& w, std::span<const double> z, RandomSource& src, TraversalOrder order) {
    return schur_sample_run(w, z, src, order).sample;
}

ProcessSample in_place_boundary_sample(const Word& w, std::span<const double> z, RandomSource& src,
                                       BoundaryStats* stats) {
    auto plan = precompute_par<double>(w, z);
    check_convergence(plan);
    int m = plan.columns();
    int n = plan.rows();
    ProcessSample out{w, std::vector<double>(z.begin(), z.end()), src.seed(),
                      std::vector<Partition>(w.size() + 1)};

    // k index of the leftmost boundary point at each height
    std::vector<int> first_k(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t k = 0; k < plan.boundary.size(); ++k) {
        int j = plan.boundary[k].second;
        if (first_k[static_cast<std::size_t>(j)] < 0) first_k[static_cast<std::size_t>(j)] = static_cast<int>(k);
    }
    auto emit_row = [&](const std::vector<Partition>& line, int j, int from) {
        int k0 = first_k[static_cast<std::size_t>(j)];
        for (int i = from; i < static_cast<int>(line.size()); ++i)
            out.lambdas[static_cast<std::size_t>(k0 + i - from)] = line[static_cast<std::size_t>(i)];
    };

    std::vector<Partition> line(static_cast<std::size_t>(m) + 1);  // τ(·, j-1)
    std::size_t peak = line.size() + 1;
    std::uint64_t cost = 0;
    for (int j = 1; j <= n; ++j) {
        int len = plan.shape.part(static_cast<std::size_t>(j));
        emit_row(line, j - 1, len);
        line.resize(static_cast<std::size_t>(len) + 1);
        Partition diag = std::move(line[0]);
        line[0] = Partition{};
        for (int i = 1; i <= len; ++i) {
            long r = draw_box(plan.type(i, j), plan.xi(i, j), src, nullptr);
            Partition up = kernel::grow(plan.type(i, j), line[static_cast<std::size_t>(i - 1)],
                                        line[static_cast<std::size_t>(i)], diag, r, cost);
            diag = std::move(line[static_cast<std::size_t>(i)]);
            line[static_cast<std::size_t>(i)] = std::move(up);
        }
        peak = std::max(peak, line.size() + 1);
    }
    emit_row(line, n, 0);
    if (stats) {
        stats->peak_live_partitions = peak;
        stats->cost = cost;
    }
    return out;
}

BoxInputs reconstruct_inputs(const ProcessSample& sample) {
    validate_sample(sample);
    auto plan = precompute_par<double>(sample.word, sample.z);
    LatticeArray<Partition> tau(plan.shape, plan.columns(), plan.rows());
    LatticeArray<char> known(plan.shape, plan.columns(), plan.rows(), 0);
    for (std::size_t k = 0; k < plan.boundary.size(); ++k) {
        auto [i, j] = plan.boundary[k];
        tau.at(i, j) = sample.lambdas[k];
        known.at(i, j) = 1;
    }
    BoxInputs in(plan.shape, plan.columns(), plan.rows(), 0);
    // reverse row-major: every box sees its three outer corners already determined
    for (int j = plan.rows(); j >= 1; --j)
        for (int i = plan.shape.part(static_cast<std::size_t>(j)); i >= 1; --i) {
            if (!known.at(i, j) || !known.at(i - 1, j) || !known.at(i, j - 1))
                throw std::logic_error("reconstruct_inputs: traversal reached an undetermined corner");
            Preimage p = shrink(plan.type(i, j), tau.at(i - 1, j), tau.at(i, j), tau.at(i, j - 1));
            if (known.at(i - 1, j - 1) && tau.at(i - 1, j - 1) != p.kappa)
                throw std::invalid_argument("sample is inconsistent with its word");
            tau.at(i - 1, j - 1) = std::move(p.kappa);
            known.at(i - 1, j - 1) = 1;
            in.at(i, j) = p.rand;
        }
    for (int i = 0; i <= plan.columns(); ++i)
        if (!tau.at(i, 0).empty()) throw std::invalid_argument("sample is inconsistent with its word");
    for (int j = 0; j <= plan.rows(); ++j)
        if (!tau.at(0, j).empty()) throw std::invalid_argument("sample is inconsistent with its word");
    return in;
}

std::vector<long> row_major_inputs(const BoxInputs& inputs, const Partition& shape) {
    std::vector<long> out;
    for (std::size_t j = 1; j <= shape.length(); ++j)
        for (int i = 1; i <= shape.part(j); ++i) out.push_back(inputs.at(i, static_cast<int>(j)));
    return out;
}

}  // namespace schur
