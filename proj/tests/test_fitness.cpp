#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "umda/fitness.hpp"
#include "umda/rng.hpp"

using umda::BitString;

TEST_CASE("onemax") {
    CHECK(umda::onemax({1, 1, 1, 1}) == 4);
    CHECK(umda::onemax({0, 0, 0, 0}) == 0);
    CHECK(umda::onemax({1, 0, 1, 0}) == 2);
}

TEST_CASE("leadingones") {
    CHECK(umda::leadingones({1, 1, 0, 1}) == 2);
    CHECK(umda::leadingones({0, 1, 1, 1}) == 0);
    CHECK(umda::leadingones({1, 1, 1, 1}) == 4);
}

TEST_CASE("binval") {
    CHECK(umda::binval({1, 0, 1}) == 5);
    CHECK(umda::binval({0, 0, 0}) == 0);
    CHECK(umda::binval({1, 1, 1}) == 7);
    CHECK_THROWS_AS(umda::binval(BitString(63, 1)), std::invalid_argument);
}

TEST_CASE("onemax invariants") {
    umda::Xoshiro256 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(20);
        BitString x(n);
        for (auto& b : x) b = static_cast<std::uint8_t>(rng.below(2));
        const long long v = umda::onemax(x);
        CHECK(v >= 0);
        CHECK(v <= static_cast<long long>(n));
        BitString comp(n);
        for (std::size_t i = 0; i < n; ++i) comp[i] = 1 - x[i];
        CHECK(v + umda::onemax(comp) == static_cast<long long>(n));
        // permutation invariance
        BitString shuffled = x;
        for (std::size_t i = 0; i + 1 < n; ++i)
            std::swap(shuffled[i], shuffled[i + rng.below(n - i)]);
        CHECK(umda::onemax(shuffled) == v);
    }
}

TEST_CASE("fitness_by_name") {
    const auto f = umda::fitness_by_name("onemax");
    CHECK(f.evaluator({1, 0, 1}) == 2);
    CHECK(f.optimum(5) == 5);
    CHECK(umda::fitness_by_name("leadingones").evaluator({1, 0}) == 1);
    CHECK(umda::fitness_by_name("binval").optimum(3) == 7);
    CHECK_THROWS_AS(umda::fitness_by_name("nonesuch"), std::invalid_argument);
}
