#include "malab/variation.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace malab;

TEST_CASE("mutate with p=0 and p=1") {
    RngStream rng(1);
    BitString x = BitString::parse("0110010");
    for (int t = 0; t < 50; ++t) {
        CHECK(mutate(x, 0.0, rng) == x);
        BitString flipped = mutate(x, 1.0, rng);
        for (std::size_t i = 0; i < x.length(); ++i)
            CHECK(flipped.bit(i) == !x.bit(i));
    }
    CHECK_THROWS_AS(mutate(x, -0.1, rng), std::invalid_argument);
    CHECK_THROWS_AS(mutate(x, 1.5, rng), std::invalid_argument);
}

TEST_CASE("mutate leaves the input unchanged") {
    RngStream rng(2);
    BitString x = BitString::parse("10101010");
    const BitString copy = x;
    (void)mutate(x, 0.5, rng);
    CHECK(x == copy);
}

TEST_CASE("mean flip count matches the binomial mean at n=100, p=1/100") {
    RngStream rng(5);
    const std::size_t n = 100;
    const double p = 1.0 / 100.0;
    const int samples = 100000;
    BitString x(n);
    std::uint64_t flips = 0;
    for (int s = 0; s < samples; ++s)
        flips += hamming(x, mutate(x, p, rng));
    // Binomial(n,p): mean 1, per-sample std sqrt(n p (1-p)); 3 standard errors
    const double mean = static_cast<double>(flips) / samples;
    const double se = std::sqrt(n * p * (1 - p)) / std::sqrt(static_cast<double>(samples));
    CHECK(std::abs(mean - 1.0) <= 3 * se);
}

TEST_CASE("per-bit flip frequency is uniform at n=50, p=1/n") {
    RngStream rng(6);
    const std::size_t n = 50;
    const double p = 1.0 / static_cast<double>(n);
    const int samples = 100000;
    std::vector<int> flips(n, 0);
    BitString x(n);
    for (int s = 0; s < samples; ++s) {
        BitString y = mutate(x, p, rng);
        for (std::size_t i = 0; i < n; ++i)
            if (y.bit(i))
                ++flips[i];
    }
    const double se = std::sqrt(p * (1 - p) * samples);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(flips[i] - samples * p) <= 3 * se);
}

TEST_CASE("neighbors in fixed order") {
    auto nb = neighbors(BitString::parse("00"));
    REQUIRE(nb.size() == 2);
    CHECK(nb[0].str() == "10");
    CHECK(nb[1].str() == "01");

    auto nb3 = neighbors(BitString::parse("101"));
    std::set<std::string> as_set;
    for (const auto& b : nb3)
        as_set.insert(b.str());
    CHECK(as_set == std::set<std::string>{"001", "111", "100"});
}

TEST_CASE("neighbors are n distinct points at distance 1") {
    RngStream rng(9);
    for (std::size_t n : {1u, 7u, 33u}) {
        BitString x(n);
        for (std::size_t i = 0; i < n; ++i)
            x.set_bit(i, rng.next_bernoulli(0.5));
        const auto fixed = neighbors(x);
        const auto shuffled = neighbors_shuffled(x, rng);
        for (const auto* list : {&fixed, &shuffled}) {
            REQUIRE(list->size() == n);
            std::set<std::string> distinct;
            for (const auto& y : *list) {
                CHECK(hamming(x, y) == 1);
                distinct.insert(y.str());
            }
            CHECK(distinct.size() == n);
        }
    }
}
