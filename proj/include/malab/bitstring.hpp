#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace malab {

/// Fixed-length binary search point. Bit index 0 is the leftmost position;
/// the length is fixed at construction.
class BitString {
  public:
    BitString() = default;

    /// All-zero string of n bits.
    explicit BitString(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

    static BitString zeros(std::size_t n) { return BitString(n); }
    static BitString ones(std::size_t n);

    /// Parses a string of '0'/'1' characters, index 0 = leftmost character.
    static BitString parse(std::string_view s);

    std::size_t length() const { return len_; }

    bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_bit(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip_bit(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitString with_flipped(std::size_t i) const {
        BitString r = *this;
        r.flip_bit(i);
        return r;
    }

    std::size_t count_ones() const;

    /// Bits 0..min(length,64)-1 packed into one word. Fast path for n <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    std::span<const std::uint64_t> words() const { return words_; }

    std::string str() const;

    std::size_t hash() const;

    bool operator==(const BitString&) const = default;

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of positions where a and b differ. Throws std::invalid_argument on
/// length mismatch.
std::size_t hamming(const BitString& a, const BitString& b);

std::ostream& operator<<(std::ostream& os, const BitString& x);

} // namespace malab

template <> struct std::hash<malab::BitString> {
    std::size_t operator()(const malab::BitString& x) const noexcept { return x.hash(); }
};
