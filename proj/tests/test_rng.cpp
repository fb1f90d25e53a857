#include "malab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <unordered_set>

using namespace malab;

TEST_CASE("equal seeds replay identically over 1e6 draws") {
    RngStream a(123456789), b(123456789);
    for (int i = 0; i < 1000000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("child streams have no shared prefix across 1e4 indices") {
    RngStream parent(42);
    std::unordered_set<std::uint64_t> first_draws;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        RngStream c = parent.child(i);
        first_draws.insert(c.next_u64());
    }
    // all first draws distinct => no two streams share even a length-1 prefix
    CHECK(first_draws.size() == 10000);

    // deeper check on a subset: full 1e3-draw sequences are pairwise distinct
    std::unordered_set<std::uint64_t> digests;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        RngStream c = parent.child(i);
        std::uint64_t h = 0;
        for (int d = 0; d < 1000; ++d)
            h = h * 0x100000001B3ull ^ c.next_u64();
        digests.insert(h);
    }
    CHECK(digests.size() == 1000);
}

TEST_CASE("child derivation is a pure function of seed and index") {
    RngStream p1(777), p2(777);
    RngStream c1 = p1.child(5), c2 = p2.child(5);
    p1.next_u64(); // consuming the parent does not change child derivation
    RngStream c3 = p1.child(5);
    const std::uint64_t v = c1.next_u64();
    CHECK(v == c2.next_u64());
    CHECK(v == c3.next_u64());
}

TEST_CASE("next_below stays in range and covers all residues") {
    RngStream rng(7);
    std::vector<int> counts(10, 0);
    for (int i = 0; i < 100000; ++i)
        ++counts[rng.next_below(10)];
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("next_double is in [0,1) with mean near one half") {
    RngStream rng(11);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double d = rng.next_double();
        REQUIRE(d >= 0.0);
        REQUIRE(d < 1.0);
        sum += d;
    }
    CHECK(std::abs(sum / 100000 - 0.5) < 0.01);
}

TEST_CASE("permutation is a permutation") {
    RngStream rng(3);
    auto p = rng.permutation(50);
    std::unordered_set<std::uint32_t> seen(p.begin(), p.end());
    CHECK(seen.size() == 50);
    for (std::uint32_t v : p)
        CHECK(v < 50);
}
