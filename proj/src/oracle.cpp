#include "schur/oracle.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schur/local_rules.hpp"
#include "schur/rational.hpp"

namespace schur::oracle {

namespace {

// ν_1 ∈ [μ_1, μ_1 + room], ν_i ∈ [μ_i, μ_{i−1}] for 2 ≤ i ≤ ℓ(μ)+1.
void add_rows(const Partition& mu, std::size_t i, long room, std::vector<int>& cur, std::vector<Partition>& out) {
    std::size_t last = mu.length() + 1;
    if (i > last) {
        out.push_back(Partition(cur));
        return;
    }
    int lo = mu.part(i);
    long hi = i == 1 ? lo + room : std::min<long>(mu.part(i - 1), lo + room);
    for (long v = lo; v <= hi; ++v) {
        cur.push_back(static_cast<int>(v));
        add_rows(mu, i + 1, room - (v - lo), cur, out);
        cur.pop_back();
    }
}

// μ_i ∈ [λ_{i+1}, λ_i]
void remove_rows(const Partition& lambda, std::size_t i, std::vector<int>& cur, std::vector<Partition>& out) {
    if (i > lambda.length()) {
        out.push_back(Partition(cur));
        return;
    }
    for (int v = lambda.part(i + 1); v <= lambda.part(i); ++v) {
        cur.push_back(v);
        remove_rows(lambda, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> conjugate_all(std::vector<Partition> v) {
    for (auto& p : v) p = conjugate(p);
    return v;
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& mu, long cap) {
    std::vector<Partition> out;
    if (mu.weight() > cap) return out;
    std::vector<int> cur;
    add_rows(mu, 1, cap - mu.weight(), cur, out);
    return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    remove_rows(lambda, 1, cur, out);
    return out;
}

std::vector<Partition> add_vertical_strips(const Partition& mu, long cap) {
    return conjugate_all(add_horizontal_strips(conjugate(mu), cap));
}

std::vector<Partition> remove_vertical_strips(const Partition& lambda) {
    return conjugate_all(remove_horizontal_strips(conjugate(lambda)));
}

std::vector<Partition> successors(const Partition& lambda, Relation rel, long cap) {
    std::vector<Partition> out;
    switch (rel) {
        case Relation::LH: out = add_horizontal_strips(lambda, cap); break;
        case Relation::LV: out = add_vertical_strips(lambda, cap); break;
        case Relation::RH: out = remove_horizontal_strips(lambda); break;
        case Relation::RV: out = remove_vertical_strips(lambda); break;
    }
    std::erase_if(out, [&](const Partition& p) { return p.weight() > cap; });
    return out;
}

mpq_class sequence_weight(const Word& w, std::span<const mpq_class> z, const Sequence& seq) {
    if (seq.size() != w.size() + 1 || z.size() != w.size()) throw std::invalid_argument("length mismatch");
    mpq_class out = 1;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        long d = seq[k].weight() - seq[k - 1].weight();
        out *= pow(z[k - 1], static_cast<unsigned long>(d < 0 ? -d : d));
    }
    return out;
}

mpq_class symmetric_sequence_weight(const Word& w, std::span<const mpq_class> z, const mpq_class& t,
                                    const Sequence& half) {
    return sequence_weight(w, z, half) * pow(t, static_cast<unsigned long>(half.back().weight()));
}

mpq_class WeightedSupport::total() const {
    mpq_class s = 0;
    for (const auto& [k, v] : entries) s += v;
    return s;
}

namespace {

struct BoxLaw {
    bool geometric;
    mpq_class xi;
    int multiplicity;
};

// P(Σ m_b U_b > cap) for independent U_b ~ Geom(ξ) or Bernoulli(ξ/(1+ξ)).
mpq_class exceed_probability(const std::vector<BoxLaw>& boxes, long cap) {
    std::vector<mpq_class> dist(static_cast<std::size_t>(cap) + 1, 0);
    dist[0] = 1;
    for (const auto& b : boxes) {
        std::vector<mpq_class> pmf(static_cast<std::size_t>(cap) + 1, 0);
        if (b.geometric) {
            mpq_class p = 1 - b.xi;
            for (long k = 0; k * b.multiplicity <= cap; ++k) {
                pmf[static_cast<std::size_t>(k * b.multiplicity)] = p;
                p *= b.xi;
            }
        } else {
            pmf[0] = 1 / (1 + b.xi);
            if (b.multiplicity <= cap) pmf[static_cast<std::size_t>(b.multiplicity)] = b.xi / (1 + b.xi);
        }
        std::vector<mpq_class> next(dist.size(), 0);
        for (std::size_t s = 0; s < dist.size(); ++s) {
            if (dist[s] == 0) continue;
            for (std::size_t k = 0; s + k < dist.size(); ++k)
                if (pmf[k] != 0) next[s + k] += dist[s] * pmf[k];
        }
        dist = std::move(next);
    }
    mpq_class inside = 0;
    for (auto& d : dist) inside += d;
    return 1 - inside;
}

void set_tail(WeightedSupport& s, const std::vector<BoxLaw>& boxes) {
    for (const auto& b : boxes)
        if (b.geometric && b.xi >= 1) {
            s.divergent = true;
            return;
        }
    s.tail_probability = exceed_probability(boxes, s.cap);
    // enumerated = Z(1 − p') with p' ≤ p, so Z − enumerated ≤ enumerated · p / (1 − p)
    s.tail_bound = s.total() * s.tail_probability / (1 - s.tail_probability);
}

class Enumerator {
public:
    Enumerator(const Word& w, std::span<const mpq_class> z, long cap, std::size_t limit,
               std::function<bool(const Partition&)> final_ok, std::function<mpq_class(const Partition&)> final_weight)
        : w_(w), z_(z), cap_(cap), limit_(limit), final_ok_(std::move(final_ok)),
          final_weight_(std::move(final_weight)), memo_(w.size() + 1) {}

    void run(WeightedSupport& out) {
        Sequence seq{Partition{}};
        if (reachable(0, seq[0])) walk(seq, mpq_class(1), out);
    }

private:
    bool reachable(std::size_t k, const Partition& lambda) {
        if (k == w_.size()) return final_ok_(lambda);
        auto& m = memo_[k];
        if (auto it = m.find(lambda); it != m.end()) return it->second;
        bool ok = false;
        for (const auto& nu : successors(lambda, w_.at(k + 1), cap_))
            if (reachable(k + 1, nu)) {
                ok = true;
                break;
            }
        m.emplace(lambda, ok);
        return ok;
    }

    void walk(Sequence& seq, const mpq_class& weight, WeightedSupport& out) {
        std::size_t k = seq.size() - 1;
        if (k == w_.size()) {
            if (out.entries.size() >= limit_) throw std::length_error("support enumeration exceeds the entry limit");
            out.entries.emplace(seq, weight * final_weight_(seq.back()));
            return;
        }
        const Partition cur = seq.back();
        for (auto& nu : successors(cur, w_.at(k + 1), cap_)) {
            if (!reachable(k + 1, nu)) continue;
            long d = nu.weight() - cur.weight();
            mpq_class wt = weight * pow(z_[k], static_cast<unsigned long>(d < 0 ? -d : d));
            seq.push_back(std::move(nu));
            walk(seq, wt, out);
            seq.pop_back();
        }
    }

    const Word& w_;
    std::span<const mpq_class> z_;
    long cap_;
    std::size_t limit_;
    std::function<bool(const Partition&)> final_ok_;
    std::function<mpq_class(const Partition&)> final_weight_;
    std::vector<std::map<Partition, bool>> memo_;
};

}  // namespace

WeightedSupport enumerate_support(const Word& w, std::span<const mpq_class> z, long cap, std::size_t entry_limit) {
    if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    WeightedSupport s;
    s.cap = cap;
    Enumerator e(
        w, z, cap, entry_limit, [](const Partition& p) { return p.empty(); },
        [](const Partition&) { return mpq_class(1); });
    e.run(s);
    std::vector<BoxLaw> boxes;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (is_left(w[i]) && !is_left(w[j]))
                boxes.push_back({is_primed(w[i]) == is_primed(w[j]), z[i] * z[j], 1});
    set_tail(s, boxes);
    return s;
}

WeightedSupport enumerate_symmetric_support(const Word& w, std::span<const mpq_class> z, const mpq_class& t,
                                            BoundaryMode mode, long cap, std::size_t entry_limit) {
    if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    if (t <= 0) throw std::domain_error("t must be positive");
    WeightedSupport s;
    s.cap = cap;
    auto ok = [mode](const Partition& p) {
        switch (mode) {
            case BoundaryMode::free: return true;
            case BoundaryMode::even_rows: return all_parts_even(p);
            case BoundaryMode::even_columns: return all_columns_even(p);
        }
        return false;
    };
    Enumerator e(w, z, cap, entry_limit, ok,
                 [&t](const Partition& p) { return pow(t, static_cast<unsigned long>(p.weight())); });
    e.run(s);

    // boxes of the doubled word; mirrored pairs count twice
    std::vector<BoxLaw> boxes;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_left(w[i])) continue;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (!is_left(w[j]))
                boxes.push_back({is_primed(w[i]) == is_primed(w[j]), z[i] * z[j], 2});
            else
                boxes.push_back({w[i] == w[j], t * t * z[i] * z[j], 2});
        }
        mpq_class tz = t * z[i];
        switch (mode) {
            case BoundaryMode::free: boxes.push_back({true, tz, 1}); break;
            case BoundaryMode::even_rows:
                if (!is_primed(w[i])) boxes.push_back({true, tz * tz, 2});
                break;
            case BoundaryMode::even_columns:
                if (is_primed(w[i])) boxes.push_back({true, tz * tz, 2});
                break;
        }
    }
    set_tail(s, boxes);
    return s;
}

mpq_class exact_probability(const Sequence& seq, const WeightedSupport& support) {
    auto it = support.entries.find(seq);
    if (it == support.entries.end()) throw std::invalid_argument("sequence is outside the enumerated support");
    return it->second / support.total();
}

void Histogram::add(const Sequence& s, const WeightedSupport& support) {
    ++total;
    if (support.entries.count(s))
        ++counts[s];
    else
        ++overflow;
}

double tv_distance(const Histogram& h, const WeightedSupport& support) {
    if (h.total == 0) throw std::invalid_argument("empty histogram");
    double total = support.total().get_d();
    double n = static_cast<double>(h.total);
    double acc = 0;
    for (const auto& [seq, w] : support.entries) {
        double p = w.get_d() / total;
        auto it = h.counts.find(seq);
        double ph = it == h.counts.end() ? 0.0 : static_cast<double>(it->second) / n;
        acc += std::abs(ph - p);
    }
    return 0.5 * acc + static_cast<double>(h.overflow) / n;
}

double expected_null_tv(const WeightedSupport& support, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("no draws");
    double total = support.total().get_d();
    double nd = static_cast<double>(n);
    double acc = 0;
    for (const auto& [seq, w] : support.entries) {
        double p = w.get_d() / total;
        if (p <= 0.0 || p >= 1.0) continue;
        // de Moivre: E|X − np| = 2m C(n,m) p^m (1−p)^{n−m+1}, m = ⌊np⌋ + 1
        double m = std::floor(nd * p) + 1;
        if (m > nd) continue;
        double lg = std::lgamma(nd + 1) - std::lgamma(m + 1) - std::lgamma(nd - m + 1) + m * std::log(p) +
                    (nd - m + 1) * std::log1p(-p);
        acc += 2 * m * std::exp(lg);
    }
    return acc / (2 * nd);
}

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> probabilities,
                     std::uint64_t overflow, double min_expected) {
    if (observed.size() != probabilities.size()) throw std::invalid_argument("length mismatch");
    double n = static_cast<double>(overflow);
    for (auto o : observed) n += static_cast<double>(o);
    if (n == 0) throw std::invalid_argument("no observations");
    ChiSquare out;
    double pooled_obs = static_cast<double>(overflow);
    double pooled_p = 1.0;
    int cells = 0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        double e = n * probabilities[k];
        pooled_p -= probabilities[k];
        if (e < min_expected) {
            pooled_obs += static_cast<double>(observed[k]);
            pooled_p += probabilities[k];
            continue;
        }
        double d = static_cast<double>(observed[k]) - e;
        out.statistic += d * d / e;
        ++cells;
    }
    pooled_p = std::max(pooled_p, 0.0);
    double pe = n * pooled_p;
    if (pe > 0) {
        double d = pooled_obs - pe;
        out.statistic += d * d / pe;
        ++cells;
    } else if (pooled_obs > 0) {
        out.statistic = INFINITY;
    }
    out.dof = std::max(cells - 1, 1);
    if (std::isinf(out.statistic)) {
        out.p_value = 0;
    } else {
        boost::math::chi_squared dist(out.dof);
        out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    }
    return out;
}

ChiSquare chi_square(const Histogram& h, const WeightedSupport& support, double min_expected) {
    double total = support.total().get_d();
    std::vector<std::uint64_t> obs;
    std::vector<double> prob;
    for (const auto& [seq, w] : support.entries) {
        auto it = h.counts.find(seq);
        obs.push_back(it == h.counts.end() ? 0 : it->second);
        prob.push_back(w.get_d() / total);
    }
    return chi_square(obs, prob, h.overflow, min_expected);
}

bool BijectionReport::ok() const {
    for (const auto& r : rules)
        if (!r.counterexamples.empty()) return false;
    return true;
}

std::string BijectionReport::summary() const {
    std::ostringstream os;
    for (const auto& r : rules) {
        os << r.rule << ": " << r.cases << " cases, " << r.counterexamples.size() << " counterexamples\n";
        for (const auto& c : r.counterexamples) os << "  " << c << "\n";
    }
    os << "block interleaving checks: " << interleave_checks << "\n";
    return os.str();
}

namespace {

void note(RuleReport& r, std::size_t limit, const std::string& what) {
    if (r.counterexamples.size() < limit) r.counterexamples.push_back(what);
    else if (r.counterexamples.size() == limit) r.counterexamples.push_back("...");
}

std::string show(std::initializer_list<std::pair<const char*, const Partition*>> items, long rand) {
    std::ostringstream os;
    for (auto& [name, p] : items) os << name << "=" << to_string(*p) << " ";
    os << "rand=" << rand;
    return os.str();
}

// Strip relation of "big ⊇ small" named by its right-hand form.
bool strip(const Partition& big, const Partition& small, Relation right_rel) {
    return interlaces(big, small, right_rel);
}

std::vector<Partition> strips_above(const Partition& p, Relation right_rel, long cap) {
    return right_rel == Relation::RH ? add_horizontal_strips(p, cap) : add_vertical_strips(p, cap);
}

void check_square(BoxType type, int W, RuleReport& rep, std::uint64_t& interleave, std::size_t limit) {
    // λ/κ and μ/κ strip kinds
    Relation rl = (type == BoxType::HH || type == BoxType::VH) ? Relation::RH : Relation::RV;
    Relation rm = (type == BoxType::HH || type == BoxType::HV) ? Relation::RH : Relation::RV;
    bool dual = is_dual(type);
    long R = dual ? 1 : 2L * W;

    std::map<std::pair<Partition, Partition>, std::vector<Partition>> groups;
    for (const auto& kappa : partitions_up_to(W))
        for (const auto& lambda : strips_above(kappa, rl, W))
            for (const auto& mu : strips_above(kappa, rm, W)) groups[{lambda, mu}].push_back(kappa);

    for (const auto& [lm, kappas] : groups) {
        const auto& [lambda, mu] = lm;
        if (dual) {
            ++interleave;
            HvBlocks b = type == BoxType::HV ? hv_blocks(lambda, mu) : hv_blocks(mu, lambda);
            if (!blocks_interleave(b)) note(rep, limit, "blocks do not interleave: " + show({{"λ", &lambda}, {"μ", &mu}}, 0));
        }
        std::set<Partition> image;
        for (const auto& kappa : kappas)
            for (long r = 0; r <= R; ++r) {
                ++rep.cases;
                Partition nu;
                try {
                    nu = grow(type, lambda, mu, kappa, r);
                } catch (const std::exception& ex) {
                    note(rep, limit, std::string("grow threw '") + ex.what() + "': " +
                                         show({{"λ", &lambda}, {"μ", &mu}, {"κ", &kappa}}, r));
                    continue;
                }
                auto ctx = [&] { return show({{"λ", &lambda}, {"μ", &mu}, {"κ", &kappa}, {"ν", &nu}}, r); };
                if (!strip(nu, lambda, rm) || !strip(nu, mu, rl)) note(rep, limit, "output relation fails: " + ctx());
                if (nu.weight() + kappa.weight() != lambda.weight() + mu.weight() + r)
                    note(rep, limit, "weight balance fails: " + ctx());
                if (!image.insert(nu).second) note(rep, limit, "not injective: " + ctx());
                try {
                    Preimage p = shrink(type, lambda, nu, mu);
                    if (p.kappa != kappa || p.rand != r) note(rep, limit, "inverse mismatch: " + ctx());
                } catch (const std::exception& ex) {
                    note(rep, limit, std::string("shrink threw '") + ex.what() + "': " + ctx());
                }
            }
        // every admissible ν whose preimage lies in the enumerated range must be hit
        long bound = dual ? lambda.weight() + mu.weight() + 1 : std::max(lambda.weight(), mu.weight()) + R;
        for (const auto& nu : strips_above(lambda, rm, bound))
            if (strip(nu, mu, rl) && !image.count(nu))
                note(rep, limit, "not surjective: " + show({{"λ", &lambda}, {"μ", &mu}, {"ν", &nu}}, -1));
    }
}

struct DiagRule {
    std::string name;
    Relation rel;  // strip kind of μ/κ and ν/μ
    std::function<bool(const Partition&)> parity;
    int g_factor;  // |ν| + |κ| = 2|μ| + g_factor·g; 0 for deterministic rules
    std::function<Partition(const Partition&, const Partition&, long)> grow;
    std::function<Preimage(const Partition&, const Partition&)> shrink;  // may be empty
};

void check_diag(const DiagRule& rule, int W, RuleReport& rep, std::size_t limit) {
    long R = 2L * W;
    long gmax = rule.g_factor == 0 ? 0 : R / rule.g_factor;
    for (const auto& mu : partitions_up_to(W)) {
        auto below = rule.rel == Relation::RH ? remove_horizontal_strips(mu) : remove_vertical_strips(mu);
        std::set<Partition> image;
        for (const auto& kappa : below) {
            if (!rule.parity(kappa)) continue;
            for (long g = 0; g <= gmax; ++g) {
                ++rep.cases;
                Partition nu;
                try {
                    nu = rule.grow(mu, kappa, g);
                } catch (const std::exception& ex) {
                    note(rep, limit, std::string("grow threw '") + ex.what() + "': " + show({{"μ", &mu}, {"κ", &kappa}}, g));
                    continue;
                }
                auto ctx = [&] { return show({{"μ", &mu}, {"κ", &kappa}, {"ν", &nu}}, g); };
                if (!interlaces(nu, mu, rule.rel)) note(rep, limit, "output relation fails: " + ctx());
                if (!rule.parity(nu)) note(rep, limit, "output parity fails: " + ctx());
                if (nu.weight() + kappa.weight() != 2 * mu.weight() + rule.g_factor * g)
                    note(rep, limit, "weight balance fails: " + ctx());
                if (!image.insert(nu).second) note(rep, limit, "not injective: " + ctx());
                if (rule.shrink) {
                    try {
                        Preimage p = rule.shrink(mu, nu);
                        if (p.kappa != kappa || p.rand != g) note(rep, limit, "inverse mismatch: " + ctx());
                    } catch (const std::exception& ex) {
                        note(rep, limit, std::string("shrink threw '") + ex.what() + "': " + ctx());
                    }
                }
            }
        }
        long bound = rule.g_factor == 0 ? 2 * mu.weight() : mu.weight() + R;
        for (const auto& nu : strips_above(mu, rule.rel, bound))
            if (rule.parity(nu) && !image.count(nu))
                note(rep, limit, "not surjective: " + show({{"μ", &mu}, {"ν", &nu}}, -1));
    }
}

}  // namespace

BijectionReport verify_bijections(int max_weight, std::size_t max_counterexamples) {
    BijectionReport rep;
    if (max_weight < 0) return rep;
    for (BoxType t : {BoxType::HH, BoxType::VV, BoxType::HV, BoxType::VH}) {
        RuleReport r{std::string(to_string(t)), 0, {}};
        check_square(t, max_weight, r, rep.interleave_checks, max_counterexamples);
        rep.rules.push_back(std::move(r));
    }
    auto any = [](const Partition&) { return true; };
    auto even_rows = [](const Partition& p) { return all_parts_even(p); };
    auto even_cols = [](const Partition& p) { return all_columns_even(p); };
    std::vector<DiagRule> diag{
        {"diag_h", Relation::RH, any, 1, [](auto& m, auto& k, long g) { return grow_diag_h(m, k, g); },
         [](auto& m, auto& n) { return shrink_diag_h(m, n); }},
        {"diag_h_er", Relation::RH, even_rows, 2, [](auto& m, auto& k, long g) { return grow_diag_h_er(m, k, g); },
         [](auto& m, auto& n) { return shrink_diag_h_er(m, n); }},
        {"diag_h_ec", Relation::RH, even_cols, 0, [](auto& m, auto& k, long) { return grow_diag_h_ec(m, k); },
         [](auto& m, auto& n) { return shrink_diag_h_ec(m, n); }},
        {"diag_v", Relation::RV, any, 1, [](auto& m, auto& k, long g) { return grow_diag_v(m, k, g); }, nullptr},
        {"diag_v_er", Relation::RV, even_rows, 0, [](auto& m, auto& k, long) { return grow_diag_v_er(m, k); },
         nullptr},
        {"diag_v_ec", Relation::RV, even_cols, 2, [](auto& m, auto& k, long g) { return grow_diag_v_ec(m, k, g); },
         nullptr},
    };
    for (const auto& d : diag) {
        RuleReport r{d.name, 0, {}};
        check_diag(d, max_weight, r, max_counterexamples);
        rep.rules.push_back(std::move(r));
    }
    return rep;
}

mpz_class hook_length_f(const Partition& lambda) {
    Partition c = conjugate(lambda);
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.weight()));
    mpz_class den = 1;
    for (std::size_t i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            den *= (lambda.part(i) - j) + (c.part(static_cast<std::size_t>(j)) - static_cast<int>(i)) + 1;
    return num / den;
}

double plancherel_probability(const Partition& lambda, double theta) {
    double n = static_cast<double>(lambda.weight());
    double f = hook_length_f(lambda).get_d();
    double lg = -theta + (n > 0 ? n * std::log(theta) : 0.0) + 2.0 * (std::log(f) - std::lgamma(n + 1.0));
    return std::exp(lg);
}

}  // namespace schur::oracle
