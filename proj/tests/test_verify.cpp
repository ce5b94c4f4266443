#include <doctest.h>

#include "fibwalk/verify.hpp"

using namespace fibwalk;

TEST_CASE("characterization suite vs oracle") {
    const auto rep = verify::suite_char(300);
    for (const auto& c : rep) {
        INFO(c.name, " ", c.detail);
        CHECK(c.passed);
    }
    CHECK(verify::all_passed(rep));
}

TEST_CASE("gap suite including witnesses") {
    const auto rep = verify::suite_gaps(2500);
    CHECK(rep.size() == 7);  // 4 gap sets + 3 witnesses at this limit
    for (const auto& c : rep) {
        INFO(c.name, " ", c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("paradox suite") {
    const auto rep = verify::suite_paradox(2000);
    for (const auto& c : rep) {
        INFO(c.name, " ", c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("interval suite") {
    const auto rep = verify::suite_kintervals(300);
    for (const auto& c : rep) {
        INFO(c.name, " ", c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("magic suite") {
    const auto rep = verify::suite_magic();
    CHECK(rep.size() == 4);
    for (const auto& c : rep) {
        INFO(c.name, " ", c.detail);
        CHECK(c.passed);
    }
}
