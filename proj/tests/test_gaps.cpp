#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "fibwalk/gaps.hpp"

using namespace fibwalk;
using core::Kind;
using exact::Rational;
using u64 = std::uint64_t;

TEST_CASE("ordered streams of down and up integers") {
    CHECK(gaps::stream(Kind::Down, 15) == std::vector<u64>{2, 5, 7, 9, 10, 12, 13, 15});
    CHECK(gaps::stream(Kind::Up, 11) == std::vector<u64>{3, 4, 6, 8, 11});
    CHECK_THROWS_AS(gaps::stream(Kind::Down, 1), std::invalid_argument);

    gaps::SetStream s(Kind::Down);
    CHECK(s.next() == 2);
    CHECK(s.next() == 5);
    CHECK(s.next() == 7);
}

TEST_CASE("consecutive-element gap sets") {
    const std::set<u64> want{1, 2, 3, 5};
    CHECK(gaps::gap_set(Kind::Down, 1, 20'000) == want);
    CHECK(gaps::gap_set(Kind::Up, 1, 20'000) == want);
}

TEST_CASE("skip-one gap sets") {
    const std::set<u64> want{2, 3, 4, 5, 6, 8, 10};
    CHECK(gaps::gap_set(Kind::Down, 2, 20'000) == want);
    CHECK(gaps::gap_set(Kind::Up, 2, 20'000) == want);
}

TEST_CASE("skip-two gap sets stay within the conjectured value set") {
    // Equality is only conjectured, so assert containment at this scale.
    const std::set<u64> conjectured{3, 4, 5, 6, 7, 8, 10, 11, 13};
    for (const Kind set : {Kind::Down, Kind::Up}) {
        const auto got = gaps::gap_set(set, 3, 100'000);
        CHECK(std::includes(conjectured.begin(), conjectured.end(),
                            got.begin(), got.end()));
    }
}

TEST_CASE("gap_set edge cases") {
    CHECK_THROWS_AS(gaps::gap_set(Kind::Down, 0, 100), std::invalid_argument);
    CHECK_THROWS_AS(gaps::gap_set(Kind::Down, 5, 8), std::invalid_argument);
}

TEST_CASE("first-occurrence witnesses") {
    const auto w6 = gaps::witness(Kind::Down, 2, 6, 1000);
    CHECK(w6.found);
    CHECK(w6.k == 51);
    CHECK(w6.element == 96);
    CHECK(w6.partner == 102);

    const auto w10 = gaps::witness(Kind::Down, 2, 10, 1000);
    CHECK(w10.found);
    CHECK(w10.k == 372);
    CHECK(w10.element == 746);
    CHECK(w10.partner == 756);

    const auto u10 = gaps::witness(Kind::Up, 2, 10, 10'000);
    CHECK(u10.found);
    CHECK(u10.k == 959);
    CHECK(u10.element == 1917);
    CHECK(u10.partner == 1927);

    // 7 never occurs as a skip-one gap.
    CHECK(!gaps::witness(Kind::Down, 2, 7, 100'000).found);
    CHECK(!gaps::witness(Kind::Up, 2, 7, 100'000).found);
}

TEST_CASE("observed gap densities") {
    // Exactly one skip-one up gap of 10 by limit 2000, so the density is
    // 1 over the number of valid windows.
    const u64 members = gaps::stream(Kind::Up, 2000).size();
    const auto d = gaps::gap_density(Kind::Up, 2, 10, 2000);
    CHECK(d == Rational(1ul, static_cast<unsigned long>(members - 2)));

    CHECK(gaps::gap_density(Kind::Down, 2, 7, 100'000) == 0);

    // Consecutive-gap densities over the settled value set sum to one.
    Rational total(0);
    for (const u64 g : {1ull, 2ull, 3ull, 5ull})
        total += gaps::gap_density(Kind::Down, 1, g, 50'000);
    CHECK(total == 1);

    CHECK_THROWS_AS(gaps::gap_density(Kind::Down, 4, 5, 8), std::invalid_argument);
}
