#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convdom/errors.hpp"
#include "convdom/lattice.hpp"

#include <random>
#include <set>

using namespace convdom;

TEST_CASE("enumerate_by_degree lists the degree slice in lexicographic order") {
    const auto zero = enumerate_by_degree(2, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == MultiIndex({0, 0}));

    const auto two = enumerate_by_degree(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == MultiIndex({0, 2}));
    CHECK(two[1] == MultiIndex({1, 1}));
    CHECK(two[2] == MultiIndex({2, 0}));
}

TEST_CASE("degree-slice size matches the brute-force count") {
    // independent enumeration by nested loops
    int brute = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                if (a + b + c == 4) ++brute;
    CHECK(brute == 15);
    CHECK(enumerate_by_degree(3, 4).size() == 15);
    CHECK(count_by_degree(3, 4) == 15);

    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 7; ++k)
            CHECK(enumerate_by_degree(n, k).size() == count_by_degree(n, k));
}

TEST_CASE("normalize maps indices onto the simplex") {
    const auto d = normalize(MultiIndex({1, 1}));
    CHECK(d[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(0.5).epsilon(1e-14));

    const auto e = normalize(MultiIndex({3, 1}));
    CHECK(e[0] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(0.25).epsilon(1e-14));

    const auto f = normalize(MultiIndex({2, 0, 2}));
    CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f[1] == 0.0);
    CHECK(f[2] == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(normalize(MultiIndex({0, 0})), input_error);
}

TEST_CASE("normalize is invariant under integer scaling") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(0, 9), factor(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> e{entry(rng), entry(rng), entry(rng)};
        if (e[0] + e[1] + e[2] == 0) e[0] = 1;
        const MultiIndex J(e);
        const int m = factor(rng);
        CHECK(l1_distance(normalize(J), normalize(J.scaled(m))) < 1e-14);
    }
}

TEST_CASE("direction windows select the expected indices") {
    SUBCASE("zero radius pins the axis index") {
        DirectionWindow w{SimplexDirection({1.0, 0.0}), 0.0, 3, 3};
        const auto sel = window_indices(w);
        REQUIRE(sel.size() == 1);
        CHECK(sel[0] == MultiIndex({3, 0}));
    }
    SUBCASE("zero radius pins the diagonal index") {
        DirectionWindow w{SimplexDirection({0.5, 0.5}), 0.0, 4, 4};
        const auto sel = window_indices(w);
        REQUIRE(sel.size() == 1);
        CHECK(sel[0] == MultiIndex({2, 2}));
    }
    SUBCASE("l1 ball of radius 0.2 at degree 10") {
        DirectionWindow w{SimplexDirection({0.5, 0.5}), 0.2, 10, 10};
        std::set<long long> firsts;
        for (const auto& J : window_indices(w)) firsts.insert(J[0]);
        CHECK(firsts == std::set<long long>{4, 5, 6});
    }
}

TEST_CASE("radius 2 windows cover the whole degree slice") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= 9; k += 4) {
            std::vector<double> center(static_cast<std::size_t>(n), 1.0 / n);
            DirectionWindow w{SimplexDirection(center), 2.0, k, k};
            CHECK(window_indices(w).size() == enumerate_by_degree(n, k).size());
        }
    }
}

TEST_CASE("multi-index basics") {
    CHECK_THROWS_AS(MultiIndex(std::vector<long long>{1, -1}), input_error);
    CHECK(MultiIndex({0, 0, 0}).is_zero());
    CHECK(MultiIndex({4, 6}).reduced() == MultiIndex({2, 3}));
    CHECK(MultiIndex({5, 7}).reduced() == MultiIndex({5, 7}));
    CHECK(MultiIndex({1, 2}).scaled(3) == MultiIndex({3, 6}));
    CHECK(MultiIndex({0, 3}) < MultiIndex({1, 3})); // degree first
    CHECK(MultiIndex({1, 2}) < MultiIndex({2, 1})); // then lexicographic
}
