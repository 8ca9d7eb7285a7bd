#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "pathset/pathset.hpp"
#include "support/test_support.hpp"

using namespace pathset;
using namespace pathset::testing;

namespace {

bool check_add(const PathSetHandle& in, const Rational& r, const PathSetHandle& out, std::size_t n) {
    const PathSetHandle inputs[] = {in};
    return check_arith(ArithOp{ArithKind::Add, r}, inputs, out, n);
}

}  // namespace

TEST_CASE("prefixes") {
    const PathSetHandle y = cantor(3, {0, 1});
    const PrefixSet two = prefixes(y, 2);
    CHECK(two.strings == std::vector<std::vector<Digit>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(two.values() == std::vector<std::uint64_t>{0, 1, 3, 4});
    CHECK(prefixes(add_rational(y, Rational(2)), 2).values() == std::vector<std::uint64_t>{2, 3, 5, 6});
    const PrefixSet none = prefixes(y, 0);
    REQUIRE(none.size() == 1);
    CHECK(none.strings[0].empty());

    SUBCASE("digit maps are applied") {
        Presentation pres;
        pres.p = 5;
        pres.vertices = {0};
        pres.edges = {{0, 0, 7}, {0, 0, 9}};
        pres.alphabet = std::vector<Symbol>{7, 9};
        pres.digit_map = std::map<Symbol, Digit>{{7, 1}, {9, 3}};
        CHECK(prefixes(pres, 1).values() == std::vector<std::uint64_t>{1, 3});
    }
    SUBCASE("budget") {
        try {
            prefixes(cantor(7, {0, 1, 2, 3, 4, 5, 6}), 9, 1000);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EnumerationTooLarge);
        }
        CHECK_THROWS_AS(prefixes(cantor(2, {0, 1}), 70).values(), Error);
    }
    SUBCASE("prefix sets grow and extend on random trimmed inputs") {
        std::mt19937_64 rng(61);
        for (int i = 0; i < 50; ++i) {
            const int p = random_prime(rng);
            const PathSetHandle x = random_standard(rng, p, 5);
            const std::size_t n = p == 2 ? 7 : 3;
            const PrefixSet shorter = prefixes(x, n);
            const PrefixSet longer = prefixes(x, n + 1);
            CHECK(longer.size() >= shorter.size());
            std::set<std::vector<Digit>> cut;
            for (auto s : longer.strings) {
                s.pop_back();
                cut.insert(s);
            }
            CHECK(cut == std::set<std::vector<Digit>>(shorter.strings.begin(), shorter.strings.end()));
            // Same residues as the independent DFS.
            const auto values = shorter.values();
            CHECK(std::set<std::uint64_t>(values.begin(), values.end()) == brute_values(x, n));
        }
    }
}

TEST_CASE("enumeration budget from the environment") {
    ::unsetenv("PATHSET_ENUM_BUDGET");
    CHECK(enumeration_budget_from_env() == kDefaultEnumerationBudget);
    ::setenv("PATHSET_ENUM_BUDGET", "1234", 1);
    CHECK(enumeration_budget_from_env() == 1234);
    ::setenv("PATHSET_ENUM_BUDGET", "garbage", 1);
    CHECK(enumeration_budget_from_env() == kDefaultEnumerationBudget);
    ::unsetenv("PATHSET_ENUM_BUDGET");
}

TEST_CASE("count_prefixes") {
    const PathSetHandle y = cantor(3, {0, 1});
    for (std::size_t n = 0; n <= 64; n += 8) CHECK(count_prefixes(y.presentation(), n) == BigInt(1) << n);
    const Presentation fib = load_fixture("sigma3_01_meet_quarter.json");
    CHECK(count_prefixes(fib, 1) == 2);
    CHECK(count_prefixes(fib, 5) == 13);
    CHECK(count_prefixes(fib, 100) == BigInt("927372692193078999176"));

    std::mt19937_64 rng(62);
    for (int i = 0; i < 100; ++i) {
        const int p = random_prime(rng);
        const PathSetHandle x = random_standard(rng, p, 6);
        const std::size_t max_n = p == 2 ? 8 : p == 3 ? 6 : 4;
        for (std::size_t n = 0; n <= max_n; ++n) CHECK(count_prefixes(x.presentation(), n) == prefixes(x, n).size());
    }
}

TEST_CASE("empirical_dim") {
    CHECK(empirical_dim(cantor(3, {0, 1}), 17) == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-14));
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(empirical_dim(standardize(load_fixture("sigma3_01_meet_quarter.json")), 400) - std::log(phi) / std::log(3.0)) <
          5e-3);
    const PathSetHandle y14 = minkowski_sum(cantor(5, {0, 1}), cantor(5, {0, 4}));
    CHECK(std::abs(empirical_dim(y14, 400) - std::log(2 + std::sqrt(2.0)) / std::log(5.0)) < 5e-3);
    CHECK_THROWS_AS(empirical_dim(PathSetHandle::empty_set(2), 10), Error);
}

TEST_CASE("rational residues") {
    CHECK(residue_modulus(3, 4) == 81);
    CHECK(rational_residue(Rational(1, 4), 3, 4) * 4 % 81 == 1);
    CHECK(rational_residue(Rational(-1), 5, 3) == 124);
    CHECK_THROWS_AS(rational_residue(Rational(1, 3), 3, 2), Error);
    CHECK_THROWS_AS(residue_modulus(2, 63), Error);
}

TEST_CASE("check_arith") {
    const PathSetHandle y = standardize(load_fixture("sigma3_01.json"));
    CHECK(check_add(y, Rational(2), standardize(load_fixture("sigma3_01_plus_2.json")), 6));
    CHECK_FALSE(check_add(y, Rational(1), standardize(load_fixture("sigma3_01_plus_2.json")), 6));

    const PathSetHandle sum_inputs[] = {cantor(5, {0, 1}), cantor(5, {0, 1})};
    CHECK(check_arith(ArithOp{ArithKind::Sum, {}}, sum_inputs, cantor(5, {0, 1, 2}), 6));
    CHECK_FALSE(check_arith(ArithOp{ArithKind::Sum, {}}, sum_inputs, cantor(5, {0, 1, 2, 3}), 6));

    const PathSetHandle mul_inputs[] = {y};
    CHECK(check_arith(ArithOp{ArithKind::Mul, Rational(1, 4)}, mul_inputs, standardize(load_fixture("sigma3_01_quarter.json")), 8));
    CHECK_FALSE(
        check_arith(ArithOp{ArithKind::Mul, Rational(1, 4)}, mul_inputs, standardize(load_fixture("sigma3_01_quarter_bad_edge.json")), 8));

    SUBCASE("raw nondeterministic outputs") {
        const Construction raw = build_minkowski_sum(cantor(5, {0, 1}), cantor(5, {0, 4}));
        CHECK(check_arith(ArithOp{ArithKind::Sum, {}}, sum_inputs, raw.raw, 5) == false);
        const PathSetHandle y14_inputs[] = {cantor(5, {0, 1}), cantor(5, {0, 4})};
        CHECK(check_arith(ArithOp{ArithKind::Sum, {}}, y14_inputs, raw.raw, 5));
        // A dead branch in the raw graph must not add values.
        Presentation dead = standardize(load_fixture("sigma3_01_plus_2.json")).presentation();
        dead.vertices.push_back(99);
        dead.edges.push_back({0, 99, 1});
        CHECK(check_add(y, Rational(2), standardize(dead), 6));
        const PathSetHandle one[] = {y};
        CHECK(check_arith(ArithOp{ArithKind::Add, Rational(2)}, one, dead, 6));
    }
    SUBCASE("wrong arity and budget") {
        CHECK_THROWS_AS(check_arith(ArithOp{ArithKind::Sum, {}}, mul_inputs, y, 3), Error);
        try {
            check_arith(ArithOp{ArithKind::Sum, {}}, sum_inputs, cantor(5, {0, 1, 2}), 8, 1000);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EnumerationTooLarge);
        }
    }
    SUBCASE("single flipped labels are caught") {
        std::mt19937_64 rng(63);
        int caught = 0;
        int same_set = 0;
        for (int i = 0; i < 100; ++i) {
            const int p = random_prime(rng);
            const PathSetHandle x = random_standard(rng, p, 5);
            const Rational r = random_p_integral(rng, p, 50);
            const PathSetHandle out = add_rational(x, r);
            CHECK(check_add(x, r, out, 5));

            const Presentation mutant = flip_visible_label(rng, out.presentation(), 5);
            const PathSetHandle bad = standardize(mutant);
            if (!check_add(x, r, bad, 5)) {
                ++caught;
            } else if (equivalent(bad, out)) {
                ++same_set;
            }
        }
        MESSAGE("caught " << caught << ", same set " << same_set);
        CHECK(caught + same_set == 100);
    }
}
