#include "cssl/rng.hpp"

#include <numbers>

namespace cssl {

std::uint64_t mix_u64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {
std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}
} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(mix_u64(seed)) {
    if (state_ == 0) state_ = 0x6a09e667f3bcc909ull;
}

std::uint64_t Rng::next_u64() {
    // xorshift64* on a splitmix-initialized state
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    return n == 0 ? 0 : next_u64() % n;
}

double Rng::normal() {
    const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::normal(double mean, double sigma) {
    return mean + sigma * normal();
}

Rng Rng::fork(std::uint64_t tag) const {
    return Rng(mix_u64(seed_ ^ mix_u64(tag + 0x3c6ef372fe94f82bull)));
}

Rng Rng::fork(std::string_view label, std::uint64_t tag) const {
    return Rng(mix_u64(seed_ ^ hash_label(label) ^ mix_u64(tag)));
}

} // namespace cssl
