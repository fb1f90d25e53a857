#pragma once

#include "malab/bitstring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace malab {

/// A long k-path over {0,1}^dim: a sequence of pairwise distinct points where
/// consecutive points have Hamming distance 1 and any two points closer than
/// k steps along the path are exactly that many bit flips apart, so that any
/// shortcut needs at least k simultaneous flips.
///
/// Construction (dim must be congruent 1 mod k):
///   base  P(1)   = (0, 1)
///   step  P(d+k) = [0^k p : p in P(d)]
///                  ++ [0^{k-i} 1^i last(P(d)) : i = 1..k-1]
///                  ++ [1^k p : p in reverse(P(d))]
/// which realizes the length recurrence L(1) = 2, L(d+k) = 2 L(d) + k - 1.
class LongKPath {
  public:
    /// Builds the path; throws std::invalid_argument unless k >= 1 and
    /// dim == 1 (mod k), std::overflow_error if the length does not fit.
    static std::shared_ptr<const LongKPath> build(std::size_t dim, unsigned k);

    /// Path length from the recurrence, without materializing anything.
    static std::uint64_t recurrence_length(std::size_t dim, unsigned k);

    std::size_t dim() const { return dim_; }
    unsigned k() const { return k_; }
    std::size_t length() const { return points_.size(); }

    const BitString& point(std::size_t pos) const { return points_[pos]; }
    const std::vector<BitString>& points() const { return points_; }

    /// Position of x on the path, or nullopt if x is not a path point.
    /// Throws std::invalid_argument on length mismatch.
    std::optional<std::size_t> position_of(const BitString& x) const;

    /// Position lookup by packed word (bits 0..dim-1); requires dim <= 64.
    std::optional<std::size_t> position_of_word(std::uint64_t w) const {
        auto it = word_index_.find(w);
        if (it == word_index_.end())
            return std::nullopt;
        return it->second;
    }

  private:
    LongKPath(std::size_t dim, unsigned k) : dim_(dim), k_(k) {}

    std::size_t dim_;
    unsigned k_;
    std::vector<BitString> points_;
    // For dim <= 64 positions are keyed by the packed word, otherwise by the
    // full bit string.
    std::unordered_map<std::uint64_t, std::uint32_t> word_index_;
    std::unordered_map<BitString, std::uint32_t> bits_index_;
};

} // namespace malab
