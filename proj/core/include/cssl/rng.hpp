#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cssl {

/// Deterministic random stream. The generator is a 64-bit xorshift-star
/// variant seeded through splitmix64, so identical seeds give identical
/// streams on every platform. `fork` derives an independent child stream
/// from the creation seed and a tag; it does not depend on how many values
/// have been drawn from the parent, which keeps derived streams stable when
/// code between fork points changes.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);
    /// Standard normal via Box-Muller.
    double normal();
    double normal(double mean, double sigma);

    /// Independent child stream identified by a numeric tag.
    Rng fork(std::uint64_t tag) const;
    /// Independent child stream identified by a label plus a numeric tag.
    Rng fork(std::string_view label, std::uint64_t tag = 0) const;

    /// Fisher-Yates shuffle of [first, last).
    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = uniform_index(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// splitmix64 mixing step, exposed for seed derivation.
std::uint64_t mix_u64(std::uint64_t x);

} // namespace cssl
