#pragma once

#include <cstdint>

namespace qmarg {

// Counter-based deterministic generator used for every seeded draw in the
// library (shot sampling, classical Monte Carlo, test corpora). The output
// sequence is the SplitMix64 stream keyed by (seed, stream): output i is the
// SplitMix64 finalizer applied to key + (i+1) * 0x9E3779B97F4A7C15. Distinct
// streams of the same seed are statistically independent, and a (seed,
// stream, i) triple maps to the same value on every platform.
namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
} // namespace detail

// Derives an independent sub-seed, e.g. one per repeat of a study.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return detail::mix64(seed + detail::kGolden) ^ detail::mix64(stream * 0xD1342543DE82EF95ULL + 1);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(derive_seed(seed, stream)) {}

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), unbiased via rejection. bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // width low-order random bits (width <= 64).
    std::uint64_t next_bits(unsigned width) {
        const std::uint64_t r = next_u64();
        return width >= 64 ? r : r & ((std::uint64_t{1} << width) - 1);
    }

    // Number of successes in `trials` Bernoulli(p) draws. Linear in trials,
    // which is fine at the shot counts used here.
    std::uint64_t binomial(std::uint64_t trials, double p) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            if (next_double() < p) ++hits;
        }
        return hits;
    }

private:
    std::uint64_t state_;
};

} // namespace qmarg
