#include <doctest.h>

#include <cmath>
#include <random>

#include "pathset/pathset.hpp"
#include "support/test_support.hpp"

using namespace pathset;
using namespace pathset::testing;

namespace {

std::set<std::vector<Digit>> strings(const PathSetHandle& y, std::size_t n) {
    if (y.empty()) return {};
    const PrefixSet set = prefixes(y, n);
    return {set.strings.begin(), set.strings.end()};
}

}  // namespace

TEST_CASE("set_union") {
    const PathSetHandle y = cantor(3, {0, 1});
    CHECK(equivalent(set_union(y, y), y));
    CHECK(strings(set_union(cantor(3, {0}), cantor(3, {1})), 2) ==
          std::set<std::vector<Digit>>{{0, 0}, {1, 1}});
    const double d = hausdorff_dim(set_union(cantor(5, {0, 1}), cantor(5, {0, 1, 2}))).dimension;
    CHECK(std::abs(d - std::log(3.0) / std::log(5.0)) < 1e-9);
    CHECK(equivalent(set_union(y, PathSetHandle::empty_set(3)), y));
    CHECK_THROWS_AS(set_union(y, cantor(5, {0})), Error);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const int p = random_prime(rng);
        const PathSetHandle a = random_standard(rng, p, 5);
        const PathSetHandle b = random_standard(rng, p, 5);
        const PathSetHandle u = set_union(a, b);
        const std::size_t n = p == 2 ? 8 : 4;
        auto expected = strings(a, n);
        const auto sb = strings(b, n);
        expected.insert(sb.begin(), sb.end());
        CHECK(strings(u, n) == expected);
        const double da = hausdorff_dim(a).dimension;
        const double db = hausdorff_dim(b).dimension;
        CHECK(std::abs(hausdorff_dim(u).dimension - std::max(da, db)) < 1e-9);
    }
}

TEST_CASE("intersect") {
    const PathSetHandle y = cantor(3, {0, 1});
    SUBCASE("Y01 and a quarter of it") {
        const PathSetHandle both = intersect(y, div_coprime_int(y, 4));
        REQUIRE(both.vertex_count() == 2);
        const AdjacencyMatrix a = adjacency_matrix(both.presentation());
        const AdjacencyMatrix fib{2, {{1, 1}, {1, 0}}};
        const AdjacencyMatrix fib_swapped{2, {{0, 1}, {1, 1}}};
        CHECK((a == fib || a == fib_swapped));
        CHECK(std::abs(hausdorff_dim(both).dimension - std::log((1 + std::sqrt(5.0)) / 2) / std::log(3.0)) <
              1e-9);
        CHECK(equivalent(both, standardize(load_fixture("sigma3_01_meet_quarter.json"))));
    }
    SUBCASE("trivial cases") {
        CHECK(equivalent(intersect(y, y), y));
        CHECK(intersect(cantor(3, {0}), cantor(3, {1})).empty());
        CHECK(intersect(y, PathSetHandle::empty_set(3)).empty());
        try {
            intersect(y, cantor(2, {0}));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PMismatch);
        }
    }
    SUBCASE("dead product branches are trimmed") {
        // 0 then anything vs 0 then 1s forever: after trimming only 0111... and 1s survive.
        Presentation a;
        a.p = 2;
        a.vertices = {0, 1, 2};
        a.edges = {{0, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 2, 0}};
        Presentation b;
        b.p = 2;
        b.vertices = {0, 1};
        b.edges = {{0, 1, 0}, {1, 1, 1}};
        const PathSetHandle both = intersect(standardize(a), standardize(b));
        CHECK(equivalent(both, standardize(b)));
    }
    SUBCASE("values agree with intersection of value sets on random inputs") {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 50; ++i) {
            const int p = random_prime(rng);
            const PathSetHandle a = random_standard(rng, p, 5);
            const PathSetHandle b = random_standard(rng, p, 5);
            const PathSetHandle both = intersect(a, b);
            const std::size_t n = p == 2 ? 8 : 4;
            const auto got = strings(both, n);
            // Subset of the pairwise prefix intersection at finite depth.
            const auto sa = strings(a, n);
            const auto sb = strings(b, n);
            for (const auto& s : got) {
                CHECK(sa.count(s) == 1);
                CHECK(sb.count(s) == 1);
            }
            // At the infinite-path level: A ∩ B equals A ∩ (A ∩ B) and the union law holds.
            CHECK(equivalent(intersect(a, both), both));
            CHECK(equivalent(set_union(both, a), a));
        }
    }
}

TEST_CASE("decimate and shift") {
    const PathSetHandle y = cantor(3, {0, 1});
    const PathSetHandle moved = add_rational(y, Rational(2));

    CHECK(equivalent(decimate(moved, 0, 1), moved));
    CHECK(equivalent(decimate(y, 0, 2), y));

    SUBCASE("odd digits of Y01 + 2") {
        const PathSetHandle odd = decimate(moved, 1, 2);
        for (std::size_t n = 1; n <= 5; ++n) {
            std::set<std::vector<Digit>> expected;
            for (const auto& s : strings(moved, 2 * n)) {
                std::vector<Digit> picked;
                for (std::size_t i = 1; i < 2 * n; i += 2) picked.push_back(s[i]);
                expected.insert(picked);
            }
            CHECK(strings(odd, n) == expected);
        }
    }
    SUBCASE("shift") {
        CHECK(equivalent(shift(y), y));
        Presentation one;
        one.p = 3;
        one.vertices = {0, 1};
        one.edges = {{0, 1, 1}, {1, 1, 0}};
        CHECK(equivalent(shift(standardize(one)), cantor(3, {0})));
        CHECK_FALSE(equivalent(shift(moved), moved));
    }
    SUBCASE("composition of decimations") {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 40; ++i) {
            const int p = random_prime(rng);
            const PathSetHandle x = random_standard(rng, p, 5);
            const std::int64_t m1 = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
            const std::int64_t m2 = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
            CHECK(equivalent(decimate(decimate(x, 0, m1), 0, m2), decimate(x, 0, m1 * m2)));
            const std::int64_t j = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
            const PathSetHandle d = decimate(x, j, m1);
            const std::size_t n = 3;
            std::set<std::vector<Digit>> expected;
            const std::size_t len = static_cast<std::size_t>(j) + static_cast<std::size_t>(m1) * (n - 1) + 1;
            for (const auto& s : strings(x, len)) {
                std::vector<Digit> picked;
                for (std::size_t k = 0; k < n; ++k) picked.push_back(s[static_cast<std::size_t>(j + m1 * static_cast<std::int64_t>(k))]);
                expected.insert(picked);
            }
            CHECK(strings(d, n) == expected);
        }
    }
    CHECK(decimate(PathSetHandle::empty_set(3), 1, 2).empty());
    CHECK_THROWS(decimate(y, -1, 2));
    CHECK_THROWS(decimate(y, 0, 0));
}
