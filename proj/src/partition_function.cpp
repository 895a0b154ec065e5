#include "schur/partition_function.hpp"

#include <cmath>
#include <cstdio>

#include "schur/rational.hpp"

namespace schur {

double ZValue::value() const {
    if (!finite) return INFINITY;
    return std::exp(log_value);
}

std::string ZValue::str() const {
    if (!finite) return "inf";
    if (exact) return to_string(rational);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value());
    return buf;
}

ZValue evaluate(const std::vector<ZFactor<mpq_class>>& factors) {
    ZValue z;
    z.exact = true;
    z.rational = 1;
    for (const auto& f : factors) {
        if (f.eps < 0) {
            if (f.x >= 1) {
                z.finite = false;
                z.rational = 0;
                z.log_value = INFINITY;
                return z;
            }
            z.rational /= 1 - f.x;
        } else {
            z.rational *= 1 + f.x;
        }
    }
    z.log_value = std::log(z.rational.get_d());
    if (!std::isfinite(z.log_value)) {
        // very large or tiny ratio: take logs of numerator and denominator separately
        long en = 0, ed = 0;
        double mn = mpz_get_d_2exp(&en, z.rational.get_num_mpz_t());
        double md = mpz_get_d_2exp(&ed, z.rational.get_den_mpz_t());
        z.log_value = std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
    }
    return z;
}

ZValue evaluate(const std::vector<ZFactor<double>>& factors) {
    ZValue z;
    long double acc = 0.0L;
    for (const auto& f : factors) {
        if (f.eps < 0) {
            if (!(f.x < 1.0)) {
                z.finite = false;
                z.log_value = INFINITY;
                return z;
            }
            acc -= std::log1p(-static_cast<long double>(f.x));
        } else {
            acc += std::log1p(static_cast<long double>(f.x));
        }
    }
    z.log_value = static_cast<double>(acc);
    return z;
}

ZValue z_finite(const Word& w, std::span<const mpq_class> z) { return evaluate(finite_factors<mpq_class>(w, z)); }
ZValue z_finite(const Word& w, std::span<const double> z) { return evaluate(finite_factors<double>(w, z)); }

ZValue z_symmetric(const Word& w, std::span<const mpq_class> z, const mpq_class& t, BoundaryMode mode) {
    return evaluate(symmetric_factors<mpq_class>(w, z, t, mode));
}
ZValue z_symmetric(const Word& w, std::span<const double> z, double t, BoundaryMode mode) {
    return evaluate(symmetric_factors<double>(w, z, t, mode));
}

ZValue z_from_text(const Word& w, const std::string& z_list, const std::string* t_text, BoundaryMode mode) {
    auto zq = parse_rational_list(z_list);
    std::optional<mpq_class> tq = t_text ? parse_rational(*t_text) : std::optional<mpq_class>(mpq_class(1));
    if (zq && tq && w.size() <= exact_length_limit) {
        if (zq->size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
        for (auto& v : *zq)
            if (v < 0) throw std::domain_error("parameters must be nonnegative");
        if (!t_text) return z_finite(w, *zq);
        if (*tq <= 0) throw std::domain_error("t must be positive");
        return z_symmetric(w, *zq, *tq, mode);
    }
    auto zd = parse_real_list(z_list);
    if (zd.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    for (double v : zd)
        if (!(v >= 0.0)) throw std::domain_error("parameters must be nonnegative");
    if (!t_text) return z_finite(w, zd);
    double t = parse_real(*t_text);
    if (!(t > 0.0)) throw std::domain_error("t must be positive");
    return z_symmetric(w, zd, t, mode);
}

}  // namespace schur
