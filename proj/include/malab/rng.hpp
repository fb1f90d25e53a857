#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace malab {

namespace detail {
/// splitmix64 finalizer; the fixed mixing function behind seeding and child
/// stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic seedable random stream (xoshiro256**). The entire generator
/// is pinned here rather than delegated to <random> distributions because the
/// replay contract is byte-for-byte across platforms and standard library
/// implementations.
///
/// Child streams: child(i) is seeded with
///     mix64(seed ^ mix64(0xA5A5A5A5DEADBEEFull + i))
/// a pure function of (seed, i); distinct indices give unrelated streams.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {
        std::uint64_t s = seed;
        for (auto& w : state_)
            w = s = detail::mix64(s);
    }

    std::uint64_t seed() const { return seed_; }

    RngStream child(std::uint64_t index) const {
        return RngStream(detail::mix64(seed_ ^ detail::mix64(0xA5A5A5A5DEADBEEFull + index)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection, bias-free.
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// Uniform random permutation of 0..n-1 (Fisher-Yates).
    std::vector<std::uint32_t> permutation(std::uint32_t n) {
        std::vector<std::uint32_t> p(n);
        std::iota(p.begin(), p.end(), 0u);
        for (std::uint32_t i = n; i > 1; --i)
            std::swap(p[i - 1], p[next_below(i)]);
        return p;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
};

} // namespace malab
