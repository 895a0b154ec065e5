#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "schur/symmetric.hpp"
#include "schur/unbounded.hpp"
#include "schur/word.hpp"

namespace schur {

// One factor (1 + eps·x)^eps.
template <class Scalar>
struct ZFactor {
    Scalar x;
    int eps;
};

// ∏_{i<j, w_i left, w_j right} (1 + ε z_i z_j)^ε
template <class Scalar>
std::vector<ZFactor<Scalar>> finite_factors(const Word& w, std::span<const Scalar> z) {
    if (z.size() != w.size()) throw std::invalid_argument("parameter count does not match word length");
    std::vector<ZFactor<Scalar>> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_left(w[i])) continue;
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!is_left(w[j])) out.push_back({Scalar(z[i] * z[j]), pair_sign(w[i], w[j])});
    }
    return out;
}

// Diagonal, left·right and left·left groups of the free / even boundary products.
template <class Scalar>
std::vector<ZFactor<Scalar>> symmetric_factors(const Word& w, std::span<const Scalar> z, const Scalar& t,
                                               BoundaryMode mode) {
    auto out = finite_factors<Scalar>(w, z);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_left(w[i])) continue;
        Scalar tz = t * z[i];
        switch (mode) {
            case BoundaryMode::free: out.push_back({tz, -1}); break;
            case BoundaryMode::even_rows:
                if (!is_primed(w[i])) out.push_back({Scalar(tz * tz), -1});
                break;
            case BoundaryMode::even_columns:
                if (is_primed(w[i])) out.push_back({Scalar(tz * tz), -1});
                break;
        }
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (is_left(w[j])) out.push_back({Scalar(t * t * z[i] * z[j]), left_pair_sign(w[i], w[j])});
    }
    return out;
}

struct ZValue {
    bool finite = true;
    bool exact = false;
    mpq_class rational;     // when exact && finite
    double log_value = 0;   // when finite

    double value() const;
    // exact rational text, or a decimal with 17 significant digits; "inf" when divergent
    std::string str() const;
};

ZValue evaluate(const std::vector<ZFactor<mpq_class>>& factors);
ZValue evaluate(const std::vector<ZFactor<double>>& factors);

ZValue z_finite(const Word& w, std::span<const mpq_class> z);
ZValue z_finite(const Word& w, std::span<const double> z);
ZValue z_symmetric(const Word& w, std::span<const mpq_class> z, const mpq_class& t, BoundaryMode mode);
ZValue z_symmetric(const Word& w, std::span<const double> z, double t, BoundaryMode mode);

// Parses parameter text and picks exact arithmetic when everything is rational and |w| ≤ 40.
ZValue z_from_text(const Word& w, const std::string& z_list, const std::string* t_text, BoundaryMode mode);

inline constexpr std::size_t exact_length_limit = 40;

}  // namespace schur
