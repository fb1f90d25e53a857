#pragma once

#include "malab/bitstring.hpp"
#include "malab/rng.hpp"

#include <stdexcept>
#include <vector>

namespace malab {

/// Standard bit mutation: each bit of x flips independently with probability
/// p_m. Throws std::invalid_argument if p_m is outside [0, 1].
inline BitString mutate(const BitString& x, double p_m, RngStream& rng) {
    if (!(p_m >= 0.0 && p_m <= 1.0))
        throw std::invalid_argument("mutate: p_m outside [0, 1]");
    BitString y = x;
    for (std::size_t i = 0; i < y.length(); ++i)
        if (rng.next_bernoulli(p_m))
            y.flip_bit(i);
    return y;
}

/// Hamming-1 neighborhood in fixed order: flipped-bit index ascending.
inline std::vector<BitString> neighbors(const BitString& x) {
    std::vector<BitString> out;
    out.reserve(x.length());
    for (std::size_t i = 0; i < x.length(); ++i)
        out.push_back(x.with_flipped(i));
    return out;
}

/// Hamming-1 neighborhood in a uniformly random order.
inline std::vector<BitString> neighbors_shuffled(const BitString& x, RngStream& rng) {
    auto perm = rng.permutation(static_cast<std::uint32_t>(x.length()));
    std::vector<BitString> out;
    out.reserve(x.length());
    for (std::uint32_t i : perm)
        out.push_back(x.with_flipped(i));
    return out;
}

} // namespace malab
