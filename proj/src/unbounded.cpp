#include "schur/unbounded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schur/local_rules.hpp"

namespace schur {

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j) { return (i + j) * (i + j + 1) / 2 + j; }

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t k) {
    auto d = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(k) + 1.0L) - 1.0L) / 2.0L);
    while (d * (d + 1) / 2 > k) --d;
    while ((d + 1) * (d + 2) / 2 <= k) ++d;
    std::uint64_t j = k - d * (d + 1) / 2;
    return {d - j, j};
}

ParameterSequences ParameterSequences::finite(std::vector<double> a, std::vector<double> b) {
    ParameterSequences p;
    for (double v : a)
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::domain_error("parameters must be finite and nonnegative");
    for (double v : b)
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::domain_error("parameters must be finite and nonnegative");
    p.a_ = std::move(a);
    p.b_ = std::move(b);
    auto suffix = [](const std::vector<double>& v) {
        std::vector<double> s(v.size() + 1, 0.0);
        for (std::size_t k = v.size(); k-- > 0;) s[k] = s[k + 1] + v[k];
        return s;
    };
    p.a_suffix_ = suffix(p.a_);
    p.b_suffix_ = suffix(p.b_);
    p.a_sup_ = p.a_.empty() ? 0.0 : *std::max_element(p.a_.begin(), p.a_.end());
    p.b_sup_ = p.b_.empty() ? 0.0 : *std::max_element(p.b_.begin(), p.b_.end());
    return p;
}

ParameterSequences ParameterSequences::geometric(double a0, double ra, double b0, double rb) {
    if (!(a0 >= 0.0 && b0 >= 0.0 && ra >= 0.0 && ra < 1.0 && rb >= 0.0 && rb < 1.0))
        throw std::domain_error("geometric parameter families need a0, b0 ≥ 0 and ratios in [0,1)");
    ParameterSequences p;
    p.geometric_ = true;
    p.a0_ = a0;
    p.ra_ = ra;
    p.b0_ = b0;
    p.rb_ = rb;
    p.a_sup_ = a0;
    p.b_sup_ = b0;
    return p;
}

ParameterSequences ParameterSequences::q_volume(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
    return geometric(std::sqrt(q), q, std::sqrt(q), q);
}

double ParameterSequences::a(std::uint64_t i) const {
    if (geometric_) return a0_ * std::pow(ra_, static_cast<double>(i));
    return i < a_.size() ? a_[i] : 0.0;
}

double ParameterSequences::b(std::uint64_t j) const {
    if (geometric_) return b0_ * std::pow(rb_, static_cast<double>(j));
    return j < b_.size() ? b_[j] : 0.0;
}

double ParameterSequences::a_tail(std::uint64_t h) const {
    if (geometric_) return a0_ * std::pow(ra_, static_cast<double>(h)) / (1.0 - ra_);
    return h < a_suffix_.size() ? a_suffix_[h] : 0.0;
}

double ParameterSequences::b_tail(std::uint64_t h) const {
    if (geometric_) return b0_ * std::pow(rb_, static_cast<double>(h)) / (1.0 - rb_);
    return h < b_suffix_.size() ? b_suffix_[h] : 0.0;
}

double ParameterSequences::diagonal_tail(std::uint64_t d) const {
    // {i + j ≥ d} ⊆ {i ≥ h} ∪ {j ≥ h}, h = ⌈d/2⌉
    std::uint64_t h = (d + 1) / 2;
    return a_tail(h) * b_tail(0) + a_tail(0) * b_tail(h);
}

WordConvention WordConvention::all_unprimed() {
    return {[](std::uint64_t) { return false; }, [](std::uint64_t) { return false; }, "unprimed"};
}

WordConvention WordConvention::alternating() {
    return {[](std::uint64_t i) { return i % 2 == 0; }, [](std::uint64_t j) { return j % 2 == 1; }, "alternating"};
}

double box_parameter(const ParameterSequences& p, const WordConvention& c, std::uint64_t i, std::uint64_t j) {
    double ab = p.a(i) * p.b(j);
    if (c.sign(i, j) > 0) return ab / (1.0 + ab);
    if (!(ab < 1.0)) throw std::domain_error("divergent parameters: a_i b_j ≥ 1 on a geometric box");
    return ab;
}

TruncationSampler::TruncationSampler(ParameterSequences params, WordConvention conv)
    : params_(std::move(params)), conv_(std::move(conv)) {
    prefix_.push_back(0.0L);
    // every tail box has c ≤ a_i b_j ≤ a_max b_max
    c_cap_ = params_.a_max() * params_.b_max();
    extend(8);
}

void TruncationSampler::extend(std::uint64_t diagonals) {
    constexpr std::uint64_t max_diagonals = 20000;  // ~2·10^8 boxes
    if (diagonals > max_diagonals) throw std::runtime_error("tail bound does not converge below tolerance");
    for (std::uint64_t d = diagonals_; d < diagonals; ++d)
        for (std::uint64_t j = 0; j <= d; ++j) {
            double c = box_parameter(params_, conv_, d - j, j);
            prefix_.push_back(prefix_.back() - std::log1p(-static_cast<long double>(c)));
        }
    diagonals_ = std::max(diagonals_, diagonals);
}

long double TruncationSampler::tail_bound() const {
    double t = params_.diagonal_tail(diagonals_);
    if (t == 0.0) return 0.0L;
    if (!(c_cap_ < 1.0)) return INFINITY;
    // −log(1 − c) ≤ c / (1 − c)
    return static_cast<long double>(t) / (1.0L - c_cap_);
}

std::optional<std::uint64_t> TruncationSampler::operator()(RandomSource& src) {
    long double e = -std::log(static_cast<long double>(src.uniform_open()));
    for (;;) {
        long double tau = tail_bound();
        long double total = prefix_.back();
        // K ≤ k ⟺ T∞ − L(k) ≤ E, with L(−1) = 0 and T∞ ∈ [total, total + τ]
        auto first_ok = [&](long double t_inf) -> std::size_t {
            // smallest index s in prefix_ with prefix_[s] ≥ t_inf − e; s = 0 ↔ K = −∞
            auto it = std::lower_bound(prefix_.begin(), prefix_.end(), t_inf - e);
            return static_cast<std::size_t>(it - prefix_.begin());
        };
        std::size_t lo = first_ok(total);
        bool resolved = false;
        if (std::isfinite(static_cast<double>(tau))) {
            std::size_t hi = first_ok(total + tau);
            resolved = hi < prefix_.size() && hi == lo;
            if (!resolved && tau <= 1e-15L * std::max(e, 1.0L)) resolved = true;
        }
        if (resolved) {
            if (lo == 0) return std::nullopt;
            return static_cast<std::uint64_t>(lo - 1);
        }
        extend(diagonals_ * 2);
    }
}

std::pair<double, double> TruncationSampler::empty_probability_bounds(double rel_width) {
    while (tail_bound() > static_cast<long double>(rel_width)) extend(diagonals_ * 2);
    long double total = prefix_.back();
    return {static_cast<double>(std::exp(-(total + tail_bound()))), static_cast<double>(std::exp(-total))};
}

std::optional<std::uint64_t> sample_truncation_index(const ParameterSequences& p, const WordConvention& c,
                                                     RandomSource& src) {
    TruncationSampler t(p, c);
    return t(src);
}

const Partition& PyramidalSample::at(long i) const {
    static const Partition empty;
    if (i < min_index || i > max_index()) return empty;
    return lambdas[static_cast<std::size_t>(i - min_index)];
}

bool PyramidalSample::all_empty() const {
    return std::all_of(lambdas.begin(), lambdas.end(), [](const Partition& p) { return p.empty(); });
}

void validate_pyramidal(const PyramidalSample& s, const WordConvention& c) {
    long lo = std::min(s.min_index, 0L) - 1;
    long hi = std::max(s.max_index(), 0L) + 1;
    if (!s.at(lo).empty() || !s.at(hi).empty()) throw std::invalid_argument("pyramidal sample is not finitely supported");
    for (long i = 0; i < hi; ++i) {
        Relation r = c.right_primed(static_cast<std::uint64_t>(i)) ? Relation::RV : Relation::RH;
        if (!interlaces(s.at(i), s.at(i + 1), r))
            throw std::invalid_argument("pyramidal sample breaks interlacing at index " + std::to_string(i));
    }
    for (long i = 0; -i > lo; ++i) {
        Relation r = c.left_primed(static_cast<std::uint64_t>(i)) ? Relation::RV : Relation::RH;
        if (!interlaces(s.at(-i), s.at(-i - 1), r))
            throw std::invalid_argument("pyramidal sample breaks interlacing at index " + std::to_string(-i));
    }
}

UnboundedRun unbounded_schur_run(TruncationSampler& trunc, RandomSource& src) {
    const auto& p = trunc.params();
    const auto& conv = trunc.convention();
    UnboundedRun run;
    run.K = trunc(src);
    if (!run.K) {
        run.sample.min_index = 0;
        run.sample.lambdas = {Partition{}};
        return run;
    }
    auto [i0, j0] = cantor_unpair(*run.K);
    std::uint64_t n0 = i0 + j0;
    auto n = static_cast<std::size_t>(n0);
    run.inputs.assign(n + 1, std::vector<long>(n + 1, 0));
    // Cantor order below K, then the conditioned box
    for (std::uint64_t k = 0; k < *run.K; ++k) {
        auto [i, j] = cantor_unpair(k);
        double c = box_parameter(p, conv, i, j);
        run.inputs[i][j] = conv.sign(i, j) > 0 ? bernoulli(c, src) : geometric(c, src);
    }
    {
        double c = box_parameter(p, conv, i0, j0);
        run.inputs[i0][j0] = conv.sign(i0, j0) > 0 ? 1 : 1 + geometric(c, src);
    }
    // τ(i,j) for i + j ≤ n0 + 1; the outer diagonal stays empty
    std::vector<std::vector<Partition>> tau(n + 2, std::vector<Partition>(n + 2));
    std::uint64_t cost = 0;
    for (std::size_t d = n + 1; d-- > 0;)
        for (std::size_t j = 0; j <= d; ++j) {
            std::size_t i = d - j;
            tau[i][j] = kernel::grow(conv.type(i, j), tau[i + 1][j], tau[i][j + 1], tau[i + 1][j + 1],
                                     run.inputs[i][j], cost);
        }
    run.cost = cost;
    long span = static_cast<long>(n0) + 1;
    run.sample.min_index = -span;
    run.sample.lambdas.resize(static_cast<std::size_t>(2 * span + 1));
    for (long t = -span; t <= span; ++t) {
        auto idx = static_cast<std::size_t>(t + span);
        if (t < 0)
            run.sample.lambdas[idx] = tau[static_cast<std::size_t>(-t)][0];
        else
            run.sample.lambdas[idx] = tau[0][static_cast<std::size_t>(t)];
    }
    return run;
}

PyramidalSample unbounded_schur_sample(const ParameterSequences& p, const WordConvention& c, RandomSource& src) {
    TruncationSampler t(p, c);
    return unbounded_schur_run(t, src).sample;
}

PyramidalZ z_pyramidal(const ParameterSequences& p, const WordConvention& c, double rel_tol,
                       AccumulationOrder order) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
    double cap = p.a_max() * p.b_max();
    double budget = std::log1p(rel_tol);
    auto term = [&](std::uint64_t i, std::uint64_t j) -> long double {
        long double ab = static_cast<long double>(p.a(i)) * p.b(j);
        if (c.sign(i, j) > 0) return std::log1p(ab);
        if (!(ab < 1.0L)) throw std::domain_error("divergent parameters: a_i b_j ≥ 1 on a geometric box");
        return -std::log1p(-ab);
    };
    auto tail = [&](std::uint64_t d) -> double {
        double t = p.diagonal_tail(d);
        if (t == 0.0) return 0.0;
        if (!(cap < 1.0)) return INFINITY;
        return t / (1.0 - cap);
    };
    std::uint64_t diags = 1;
    while (tail(diags) > budget) {
        if (diags > 200000) throw std::runtime_error("tail bound does not converge below tolerance");
        diags *= 2;
    }
    long double logz = 0.0L;
    if (order == AccumulationOrder::cantor) {
        std::uint64_t kmax = diags * (diags + 1) / 2;
        for (std::uint64_t k = 0; k < kmax; ++k) {
            auto [i, j] = cantor_unpair(k);
            logz += term(i, j);
        }
    } else {
        std::vector<long double> per(diags, 0.0L);
        for (std::uint64_t d = 0; d < diags; ++d)
            for (std::uint64_t i = 0; i <= d; ++i) per[d] += term(i, d - i);
        for (std::uint64_t d = diags; d-- > 0;) logz += per[d];
    }
    PyramidalZ z;
    z.log_value = static_cast<double>(logz);
    z.value = static_cast<double>(std::exp(logz));
    z.rel_error_bound = std::expm1(tail(diags));
    z.diagonals = diags;
    return z;
}

}  // namespace schur
