#include <doctest.h>

#include <numeric>
#include <vector>

#include "fibwalk/budget.hpp"
#include "fibwalk/core.hpp"
#include "fibwalk/exact.hpp"
#include "fibwalk/oracle.hpp"

using namespace fibwalk;
using core::GoodPair;
using exact::Rational;
using oracle::DensityKind;
using u64 = std::uint64_t;

namespace {

u64 prefix_count(const std::vector<std::uint8_t>& flags, u64 limit) {
    u64 c = 0;
    for (u64 m = 0; m <= limit && m < flags.size(); ++m) c += flags[m];
    return c;
}

}  // namespace

TEST_CASE("brute_slow worked examples") {
    const auto r6 = oracle::brute_slow(6);
    CHECK(r6.s == 4);
    CHECK(r6.pairs == std::vector<GoodPair>{{2, 2}, {4, 1}});

    const auto r1 = oracle::brute_slow(1);
    CHECK(r1.s == 2);
    CHECK(r1.pairs == std::vector<GoodPair>{{1, 1}});  // the a <= n slice of (a, 1)

    const auto r100 = oracle::brute_slow(100);
    CHECK(r100.s == 8);
    CHECK(r100.pairs == std::vector<GoodPair>{{6, 4}});
}

TEST_CASE("budgets are hard errors") {
    CHECK_THROWS_AS(oracle::brute_slow(100'001), BudgetError);
    CHECK_THROWS_AS(oracle::brute_slow_all(20'001), BudgetError);
    CHECK_THROWS_AS(oracle::brute_density(10'001, DensityKind::Down), BudgetError);
    CHECK_THROWS_AS(oracle::brute_density(1, DensityKind::Down), BudgetError);
}

TEST_CASE("brute_slow_all equals per-n brute_slow") {
    const u64 limit = 300;
    const auto all = oracle::brute_slow_all(limit);
    // n = 1 is excluded: the sweep reports the whole degenerate family
    // (a, 1), a <= limit, while the n-bounded enumeration stops at a = 1.
    for (u64 n = 2; n <= limit; n += 37) {
        const auto one = oracle::brute_slow(n);
        CHECK(all[n].s == one.s);
        CHECK(all[n].pairs == one.pairs);
    }
}

TEST_CASE("characterization path matches the oracle, n in [2, 500]") {
    const auto all = oracle::brute_slow_all(500);
    for (u64 n = 2; n <= 500; ++n) {
        CHECK(core::slow_steps(n) == all[n].s);
        CHECK(core::good_pairs(n) == all[n].pairs);
    }
}

TEST_CASE("brute_density: two-good-pair stream") {
    const auto flags = oracle::brute_density(100, DensityKind::TwoGood);
    // m = 5 decomposes only as 5 = 1*f_4 + 1*f_3 (t = 4, a = b = 1); with
    // a = 1 <= f_3 there is no second pair, so 6 is the first two-good value
    // and 15 the second.
    CHECK(flags[5] == 0);
    CHECK(flags[6] == 1);
    CHECK(prefix_count(flags, 6) == 1);
    CHECK(prefix_count(flags, 15) == 2);  // {6, 15}
}

TEST_CASE("brute_density: down stream matches the frozen prefix") {
    const auto flags = oracle::brute_density(50, DensityKind::Down);
    const std::vector<u64> down{2,  5,  7,  9,  10, 12, 13, 15, 18, 23, 26, 28, 31,
                                33, 34, 36, 38, 39, 41, 43, 44, 46, 47, 48, 49};
    std::vector<u64> got;
    for (u64 m = 2; m <= 50; ++m)
        if (flags[m]) got.push_back(m);
    CHECK(got == down);
    CHECK(prefix_count(flags, 13) == 7);
}

TEST_CASE("brute_density: paradox stream at d = 1/2") {
    const auto flags = oracle::brute_density(100, DensityKind::Paradox, Rational(1, 2));
    CHECK(prefix_count(flags, 4) == 1);   // m = 4 is the first
    // m = 9 is a down integer with Delta_9 = 15 - 9*phi < 1/2, so the count
    // at prefix 10 is already 2.
    CHECK(prefix_count(flags, 10) == 2);
    const std::vector<u64> expect{4, 9, 20, 25, 43, 48, 51, 56, 64, 93};
    std::vector<u64> got;
    for (u64 m = 2; m <= 100; ++m)
        if (flags[m]) got.push_back(m);
    CHECK(got == expect);
}

TEST_CASE("brute_density agrees with the exact paradox predicate") {
    for (const Rational d : {Rational(1, 2), Rational(2, 5), Rational(3, 10)}) {
        const auto flags = oracle::brute_density(2000, DensityKind::Paradox, d);
        for (u64 m = 2; m <= 2000; ++m)
            CHECK(static_cast<bool>(flags[m]) == core::is_paradoxical(m, d));
    }
}

TEST_CASE("definitional floor matches the exact route") {
    for (u64 m = 1; m <= 20'000; ++m)
        CHECK(oracle::definitional_floor_phi(m) == exact::floor_phi_u64(m));
    CHECK(oracle::definitional_floor_phi(6) == 9);
    CHECK(oracle::definitional_floor_phi(100) == 161);
}
