#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ppm/permutation.hpp"
#include "test_support.hpp"

using namespace ppm;

TEST_CASE("permutation construction accepts exactly the bijections") {
    CHECK(Permutation({2, 3, 1}).size() == 3);
    CHECK(Permutation().size() == 0);
    CHECK(ppm::testing::paw_encoding_z3().size() == 28);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), NotABijection);
    CHECK_THROWS_AS(Permutation({0, 1}), NotABijection);
    CHECK_THROWS_AS(Permutation({1, 3}), NotABijection);
    CHECK_THROWS_AS(Permutation({-1, 1}), NotABijection);
}

TEST_CASE("construction succeeds iff sorting the input yields 1..n") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Int n = 1 + static_cast<Int>(rng() % 6);
        std::vector<Int> values;
        for (Int i = 0; i < n; ++i)
            values.push_back(1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(n)));
        std::vector<Int> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Int> iota(static_cast<std::size_t>(n));
        std::iota(iota.begin(), iota.end(), Int{1});
        if (sorted == iota)
            CHECK_NOTHROW(Permutation{values});
        else
            CHECK_THROWS_AS(Permutation{values}, NotABijection);
    }
}

TEST_CASE("certificate checking follows the order-isomorphism definition") {
    CHECK(is_certificate(Permutation({1}), Permutation({1}), Certificate{{1}}));
    CHECK_FALSE(is_certificate(Permutation({1, 2}), Permutation({2, 1}), Certificate{{1, 2}}));
    CHECK(is_certificate(Permutation({1, 2}), Permutation({1, 3, 2}), Certificate{{1, 3}}));

    // not strictly increasing / out of range
    CHECK_FALSE(is_certificate(Permutation({1, 2}), Permutation({1, 2}), Certificate{{2, 2}}));
    CHECK_FALSE(is_certificate(Permutation({1, 2}), Permutation({1, 2}), Certificate{{1, 3}}));
    CHECK_FALSE(is_certificate(Permutation({1, 2}), Permutation({1, 2}), Certificate{{0, 1}}));

    CHECK_THROWS_AS(is_certificate(Permutation({1, 2}), Permutation({1, 2}), Certificate{{1}}),
                    LengthMismatch);

    // empty pattern is certified by the empty map
    CHECK(is_certificate(Permutation(), Permutation({2, 1}), Certificate{}));
}

TEST_CASE("runs reports maximal monotonic stretches") {
    SUBCASE("the (4,5,3,1,2) example has a decreasing run of length 3") {
        const auto rs = runs(Permutation({4, 5, 3, 1, 2}));
        REQUIRE(rs.size() == 3);
        CHECK(rs[0] == Run{1, 2, RunDirection::Increasing});
        CHECK(rs[1] == Run{2, 3, RunDirection::Decreasing});
        CHECK(rs[2] == Run{4, 2, RunDirection::Increasing});
    }
    SUBCASE("monotonic permutations form a single run") {
        const auto rs = runs(Permutation({1, 2, 3}));
        REQUIRE(rs.size() == 1);
        CHECK(rs[0] == Run{1, 3, RunDirection::Increasing});
    }
    SUBCASE("singleton") {
        const auto rs = runs(Permutation({1}));
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].length == 1);
    }
    SUBCASE("the paw encoding ends with the merged separators of vertex 4") {
        const auto rs = runs(ppm::testing::paw_encoding_z3());
        CHECK(rs.back() == Run{23, 6, RunDirection::Decreasing});
    }
}

TEST_CASE("runs cover every position and are maximal") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation pi =
            ppm::testing::random_permutation(rng, 1 + static_cast<Int>(rng() % 10));
        const auto rs = runs(pi);
        std::vector<bool> covered(static_cast<std::size_t>(pi.size()), false);
        for (const Run& r : rs) {
            REQUIRE(r.length >= 1);
            REQUIRE(r.start >= 1);
            REQUIRE(r.start + r.length - 1 <= pi.size());
            for (Int i = r.start; i < r.start + r.length; ++i) {
                covered[static_cast<std::size_t>(i - 1)] = true;
                if (i > r.start) {
                    const bool up = pi(i) > pi(i - 1);
                    CHECK(up == (r.direction == RunDirection::Increasing));
                }
            }
            if (pi.size() > 1) {
                // cannot be extended in either direction
                const bool inc = r.direction == RunDirection::Increasing;
                if (r.start > 1)
                    CHECK((pi(r.start) > pi(r.start - 1)) != inc);
                const Int end = r.start + r.length - 1;
                if (end < pi.size())
                    CHECK((pi(end + 1) > pi(end)) != inc);
            }
        }
        for (bool c : covered)
            CHECK(c);
    }
}

TEST_CASE("pattern_of_indices rank-compresses the selected subsequence") {
    CHECK(pattern_of_indices(Permutation({3, 1, 2}), {1, 3}) == Permutation({2, 1}));
    CHECK(pattern_of_indices(ppm::testing::paw_encoding_z3(), {1, 2, 3}) ==
          Permutation({3, 2, 1}));
    CHECK(pattern_of_indices(Permutation({1, 2}), {}) == Permutation());
    CHECK_THROWS_AS(pattern_of_indices(Permutation({1, 2}), {0}), IndexOutOfRange);
    CHECK_THROWS_AS(pattern_of_indices(Permutation({1, 2}), {3}), IndexOutOfRange);
    CHECK_THROWS_AS(pattern_of_indices(Permutation({1, 2}), {2, 1}), IndexOutOfRange);
    CHECK_THROWS_AS(pattern_of_indices(Permutation({1, 2}), {1, 1}), IndexOutOfRange);
}

TEST_CASE("selected index sets certify the pattern they induce") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Permutation pi =
            ppm::testing::random_permutation(rng, 1 + static_cast<Int>(rng() % 10));
        const std::vector<Int> indices = ppm::testing::random_index_set(rng, pi.size());
        const Permutation sigma = pattern_of_indices(pi, indices);
        CHECK(is_certificate(sigma, pi, Certificate{indices}));
    }
}

TEST_CASE("direct sum concatenates with shifted values") {
    CHECK(direct_sum(Permutation({1}), Permutation({1})) == Permutation({1, 2}));
    CHECK(direct_sum(Permutation({2, 1}), Permutation({1, 2})) == Permutation({2, 1, 3, 4}));
    CHECK(direct_sum(Permutation(), Permutation({2, 1})) == Permutation({2, 1}));
    CHECK(direct_sum(Permutation({2, 1}), Permutation()) == Permutation({2, 1}));
}

TEST_CASE("direct sum is associative with the empty permutation as identity") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation a = ppm::testing::random_permutation(rng, static_cast<Int>(rng() % 5));
        const Permutation b = ppm::testing::random_permutation(rng, static_cast<Int>(rng() % 5));
        const Permutation c = ppm::testing::random_permutation(rng, static_cast<Int>(rng() % 5));
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
        CHECK(direct_sum(a, Permutation()) == a);
        CHECK(direct_sum(Permutation(), a) == a);
    }
}
