#include <doctest.h>

#include <vector>

#include "fibwalk/core.hpp"
#include "fibwalk/exact.hpp"
#include "fibwalk/oracle.hpp"
#include "fibwalk/reverse.hpp"

using namespace fibwalk;
using core::GoodPair;
using exact::BigInt;
using exact::Rational;
using u64 = std::uint64_t;

TEST_CASE("reverse walk displays for n = 100") {
    const auto r61 = reverse::reverse_walk(100, 61);
    CHECK(r61.terms == std::vector<u64>{100, 61, 39, 22, 17, 5, 12});
    CHECK(r61.t_rev == 7);
    const auto r62 = reverse::reverse_walk(100, 62);
    CHECK(r62.terms == std::vector<u64>{100, 62, 38, 24, 14, 10, 4, 6});
    CHECK(r62.t_rev == 8);
    const auto r63 = reverse::reverse_walk(100, 63);
    CHECK(r63.terms == std::vector<u64>{100, 63, 37, 26, 11, 15});
    CHECK(r63.t_rev == 6);
}

TEST_CASE("reverse walk terms obey the closed form") {
    // r_k = (-1)^{k-1} (f_{k-2} n - f_{k-1} b)
    for (u64 n = 2; n <= 300; ++n)
        for (u64 b = 1; b < n; ++b) {
            const auto r = reverse::reverse_walk(n, b);
            for (int k = 1; k <= r.t_rev; ++k) {
                BigInt v = exact::fib(k - 2) * n - exact::fib(k - 1) * b;
                if (k % 2 == 0) v = -v;
                CHECK(v == r.terms[k - 1]);
            }
        }
}

TEST_CASE("k_locate examples and equivalence with the reverse walk") {
    CHECK(reverse::k_locate(100, 62) == 8);
    CHECK(reverse::k_locate(100, 63) == 6);
    for (u64 n = 2; n <= 300; ++n)
        for (u64 b = 1; b < n; ++b)
            CHECK(reverse::k_locate(n, b) == reverse::reverse_walk(n, b).t_rev);
}

TEST_CASE("K-interval geometry") {
    for (int u = 1; u <= 40; ++u) {
        for (int m : {2 * u + 1, 2 * u + 2}) {
            const auto k = reverse::k_interval(m);
            CHECK(k.m == m);
            CHECK(k.upper - k.lower ==
                  Rational(1) / Rational(exact::fib(m - 2) * exact::fib(m)));
            CHECK(k.lower_closed != k.upper_closed);
            // membership respects the closures
            CHECK(k.contains(k.lower) == k.lower_closed);
            CHECK(k.contains(k.upper) == k.upper_closed);
        }
        // Odd intervals live above 1/phi's convergents from one side, even
        // ones from the other; adjacent same-parity intervals share an
        // endpoint with flipped closure, so the union tiles (0, 1).
        const auto odd = reverse::k_interval(2 * u + 1);
        const auto odd_next = reverse::k_interval(2 * u + 3);
        CHECK(odd.upper == odd_next.lower);
        CHECK(odd.upper_closed != odd_next.lower_closed);
        const auto even = reverse::k_interval(2 * u + 2);
        const auto even_next = reverse::k_interval(2 * u + 4);
        CHECK(even.lower == even_next.upper);
        CHECK(even.lower_closed != even_next.upper_closed);
        // Odd intervals approach 1/phi from below, even ones from above.
        CHECK(odd.upper <= even.lower);
    }
}

TEST_CASE("k_locate agrees with exact interval membership") {
    for (u64 n : {97, 100, 233, 500}) {
        for (u64 b = 1; b < n; ++b) {
            Rational x(b, n);
            x.canonicalize();
            const int m = reverse::k_locate(n, b);
            CHECK(reverse::k_interval(m).contains(x));
        }
    }
}

TEST_CASE("fast_good_pairs worked examples") {
    const auto [ch100, p100] = reverse::fast_good_pairs(100);
    CHECK(ch100.a == 4);
    CHECK(ch100.b == 6);
    CHECK(p100 == std::vector<GoodPair>{{6, 4}});

    const auto [ch6, p6] = reverse::fast_good_pairs(6);
    CHECK(p6 == std::vector<GoodPair>{{2, 2}, {4, 1}});

    const auto [ch2, p2] = reverse::fast_good_pairs(2);
    CHECK(ch2.a == 1);
    CHECK(ch2.b == 1);
    CHECK(ch2.t == 2);
}

TEST_CASE("fast_good_pairs equals the brute-force oracle, n in [2, 800]") {
    const auto all = oracle::brute_slow_all(800);
    for (u64 n = 2; n <= 800; ++n) {
        const auto [ch, pairs] = reverse::fast_good_pairs(n);
        CHECK(ch.s == all[n].s);
        CHECK(pairs == all[n].pairs);
    }
}

TEST_CASE("no three consecutive b share the maximal interval, n <= 500") {
    for (u64 n = 2; n <= 500; ++n) {
        int best_m = 0;
        for (u64 b = 1; b < n; ++b) best_m = std::max(best_m, reverse::k_locate(n, b));
        int run = 0;
        for (u64 b = 1; b < n; ++b) {
            run = reverse::k_locate(n, b) == best_m ? run + 1 : 0;
            CHECK(run <= 2);
        }
    }
}
