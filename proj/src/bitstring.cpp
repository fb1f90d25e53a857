#include "malab/bitstring.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace malab {

BitString BitString::ones(std::size_t n) {
    BitString r(n);
    for (std::size_t w = 0; w < r.words_.size(); ++w)
        r.words_[w] = ~std::uint64_t{0};
    if (n % 64 != 0 && !r.words_.empty())
        r.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return r;
}

BitString BitString::parse(std::string_view s) {
    BitString r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            r.set_bit(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitString::parse: character is not 0 or 1");
    }
    return r;
}

std::size_t BitString::count_ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitString::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (bit(i))
            s[i] = '1';
    return s;
}

std::size_t BitString::hash() const {
    // splitmix64-style combine over words; length mixed in so that prefixes of
    // different lengths hash apart.
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(len_) << 1);
    for (std::uint64_t w : words_) {
        std::uint64_t z = w + 0x9E3779B97F4A7C15ull + h;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

std::size_t hamming(const BitString& a, const BitString& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("hamming: length mismatch");
    std::size_t d = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i)
        d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    return d;
}

std::ostream& operator<<(std::ostream& os, const BitString& x) { return os << x.str(); }

} // namespace malab
