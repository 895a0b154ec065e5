#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace schur {

enum class DrawKind : std::uint8_t { geometric, bernoulli, poisson, uniform_int };

std::string_view to_string(DrawKind k);

struct DrawRecord {
    DrawKind kind;
    double parameter;
    long value;
    friend bool operator==(const DrawRecord&, const DrawRecord&) = default;
};

// mt19937_64 seeded with the 64-bit seed; uniforms from the top 53 bits.
class RandomSource {
public:
    static constexpr std::string_view generator_name = "mt19937_64";

    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    // strictly inside (0,1)
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    void set_logging(bool on) { logging_ = on; }
    bool logging() const noexcept { return logging_; }
    const std::vector<DrawRecord>& draw_log() const noexcept { return log_; }
    void record(DrawKind kind, double parameter, long value) {
        if (logging_) log_.push_back({kind, parameter, value});
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool logging_ = false;
    std::vector<DrawRecord> log_;
};

// Independent stream seed for run `index` of a batch.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// P(k) = (1-ξ)ξ^k; throws std::domain_error unless 0 ≤ ξ < 1.
long geometric(double xi, RandomSource& src);
// P(1) = p; throws std::domain_error unless 0 ≤ p ≤ 1.
long bernoulli(double p, RandomSource& src);
long poisson(double mean, RandomSource& src);
// uniform on {0, …, n-1}, n ≥ 1
std::uint64_t uniform_below(std::uint64_t n, RandomSource& src);

struct EntropyLedger {
    std::size_t geometric_draws = 0;
    std::size_t bernoulli_draws = 0;
    std::vector<double> parameters;
    std::size_t total() const noexcept { return geometric_draws + bernoulli_draws; }
};

}  // namespace schur
