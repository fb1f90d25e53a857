#include "malab/bitstring.hpp"
#include "malab/rng.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace malab;

TEST_CASE("basic bit access and parsing") {
    BitString x = BitString::parse("0101");
    CHECK(x.length() == 4);
    CHECK_FALSE(x.bit(0));
    CHECK(x.bit(1));
    CHECK_FALSE(x.bit(2));
    CHECK(x.bit(3));
    CHECK(x.str() == "0101");
    CHECK(x.count_ones() == 2);
    CHECK(BitString::zeros(5).str() == "00000");
    CHECK(BitString::ones(5).str() == "11111");
    CHECK_THROWS_AS(BitString::parse("01x"), std::invalid_argument);
}

TEST_CASE("flip round trip and word boundary lengths") {
    for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
        BitString x(n);
        x.flip_bit(n - 1);
        CHECK(x.count_ones() == 1);
        CHECK(x.bit(n - 1));
        BitString y = x.with_flipped(n - 1);
        CHECK(y == BitString::zeros(n));
        CHECK(x.bit(n - 1)); // original untouched
        CHECK(BitString::ones(n).count_ones() == n);
    }
}

TEST_CASE("hamming examples") {
    CHECK(hamming(BitString::parse("0000"), BitString::parse("0000")) == 0);
    CHECK(hamming(BitString::parse("0101"), BitString::parse("0011")) == 2);
    for (std::size_t n : {4u, 64u, 100u})
        CHECK(hamming(BitString::ones(n), BitString::zeros(n)) == n);
    CHECK_THROWS_AS(hamming(BitString::zeros(3), BitString::zeros(4)), std::invalid_argument);
}

TEST_CASE("hamming is a metric on random triples") {
    RngStream rng(99);
    const std::size_t n = 40;
    auto random_point = [&] {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i)
            x.set_bit(i, rng.next_bernoulli(0.5));
        return x;
    };
    for (int t = 0; t < 10000; ++t) {
        BitString a = random_point(), b = random_point(), c = random_point();
        const std::size_t ab = hamming(a, b), ba = hamming(b, a);
        CHECK(ab == ba);
        CHECK(hamming(a, c) <= ab + hamming(b, c));
        CHECK((ab == 0) == (a == b));
    }
}

TEST_CASE("hash distinguishes values") {
    std::unordered_set<BitString> seen;
    for (int v = 0; v < 256; ++v) {
        BitString x(8);
        for (int i = 0; i < 8; ++i)
            if ((v >> i) & 1)
                x.set_bit(i, true);
        seen.insert(x);
    }
    CHECK(seen.size() == 256);
}
