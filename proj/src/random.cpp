#include "schur/random.hpp"

#include <cmath>
#include <stdexcept>

namespace schur {

std::string_view to_string(DrawKind k) {
    switch (k) {
        case DrawKind::geometric: return "geometric";
        case DrawKind::bernoulli: return "bernoulli";
        case DrawKind::poisson: return "poisson";
        case DrawKind::uniform_int: return "uniform_int";
    }
    return "?";
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over a combination of both words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long geometric(double xi, RandomSource& src) {
    if (!(xi >= 0.0 && xi < 1.0)) throw std::domain_error("geometric parameter must lie in [0,1)");
    long k = 0;
    if (xi > 0.0) {
        double u = src.uniform_open();
        double v = std::floor(std::log(u) / std::log(xi));
        k = v > 1e15 ? static_cast<long>(1e15) : static_cast<long>(v);
    }
    src.record(DrawKind::geometric, xi, k);
    return k;
}

long bernoulli(double p, RandomSource& src) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bernoulli parameter must lie in [0,1]");
    long b = src.uniform_open() < p ? 1 : 0;
    src.record(DrawKind::bernoulli, p, b);
    return b;
}

namespace {
long poisson_inversion(double mean, RandomSource& src) {
    double u = src.uniform_open();
    double p = std::exp(-mean);
    double cdf = p;
    long k = 0;
    while (u > cdf && k < 10000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (p == 0.0) break;
    }
    return k;
}
}  // namespace

long poisson(double mean, RandomSource& src) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw std::domain_error("poisson mean must be finite and ≥ 0");
    long total = 0;
    double rest = mean;
    // sum of independent pieces keeps e^{-mean} away from underflow
    while (rest > 30.0) {
        total += poisson_inversion(30.0, src);
        rest -= 30.0;
    }
    if (rest > 0.0) total += poisson_inversion(rest, src);
    src.record(DrawKind::poisson, mean, total);
    return total;
}

std::uint64_t uniform_below(std::uint64_t n, RandomSource& src) {
    if (n == 0) throw std::domain_error("uniform_below needs n ≥ 1");
    // rejection on the top of the range removes modulo bias
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = src.next_u64();
    } while (x >= limit);
    auto v = x % n;
    src.record(DrawKind::uniform_int, static_cast<double>(n), static_cast<long>(v));
    return v;
}

}  // namespace schur
