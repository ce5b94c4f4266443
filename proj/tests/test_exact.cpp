#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fibwalk/exact.hpp"

using namespace fibwalk::exact;

namespace {
const auto less = std::strong_ordering::less;
const auto greater = std::strong_ordering::greater;
}  // namespace

TEST_CASE("fib and lucas small values") {
    CHECK(fib(-1) == 1);
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(90) == BigInt("2880067194370816120"));
    CHECK_THROWS_AS(fib(-2), std::invalid_argument);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(2) == 3);
    CHECK(lucas(10) == 123);
    for (long k = 1; k <= 60; ++k) CHECK(lucas(k) == fib(k - 1) + fib(k + 1));
}

TEST_CASE("Cassini identity, k in [1, 200]") {
    for (long k = 1; k <= 200; ++k) {
        const BigInt lhs = fib(k - 1) * fib(k + 1) - fib(k) * fib(k);
        CHECK(lhs == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("d'Ocagne identity, m <= k in [1, 90]") {
    for (long m = 1; m <= 90; ++m)
        for (long k = m; k <= 90; ++k) {
            const BigInt lhs = fib(m + 1) * fib(k) - fib(m) * fib(k + 1);
            BigInt rhs = fib(k - m);
            if (m % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fib(t) <= 0.46 * phi^t for t in [4, 200]") {
    const QuadRat factor{Rational(23, 50), Rational(0)};
    for (long t = 4; t <= 200; ++t) {
        const QuadRat bound = factor * QuadRat::phi_pow(t);
        CHECK(qr_cmp(QuadRat(Rational(fib(t))), bound) != greater);
    }
}

TEST_CASE("isqrt examples and property") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(26) == 5);
    CHECK_THROWS_AS(isqrt(BigInt(-1)), std::invalid_argument);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        BigInt x(static_cast<unsigned long>(rng()));
        x = x * x / (1 + static_cast<unsigned long>(rng() % 1000)) + rng() % 7;
        const BigInt r = isqrt(x);
        CHECK(r * r <= x);
        CHECK((r + 1) * (r + 1) > x);
    }
}

TEST_CASE("floor_phi / ceil_phi examples") {
    CHECK(floor_phi(6) == 9);
    CHECK(floor_phi(4) == 6);
    CHECK(floor_phi(100) == 161);
    CHECK(ceil_phi(6) == 10);
    CHECK(ceil_phi(4) == 7);
    CHECK(ceil_phi(1) == 2);
    CHECK(floor_phi_u64(6) == 9);
    CHECK(ceil_phi_u64(100) == 162);
}

TEST_CASE("floor_phi sandwich under exact comparison") {
    for (unsigned long n = 1; n <= 20'000; ++n) {
        const BigInt fl = floor_phi(BigInt(n));
        const QuadRat phin{Rational(n) / 2, Rational(n) / 2};
        CHECK(qr_cmp(QuadRat(Rational(fl)), phin) == less);
        CHECK(qr_cmp(phin, QuadRat(Rational(fl + 1))) == less);
    }
}

TEST_CASE("machine-word floor_phi agrees with the big-integer path") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 4000; ++i) {
        const std::uint64_t n = 1 + rng() % 2'000'000'000'000'000'000ULL;
        const BigInt ref = floor_phi(BigInt(static_cast<unsigned long>(n)));
        CHECK(BigInt(static_cast<unsigned long>(floor_phi_u64(n))) == ref);
        CHECK(ceil_phi_u64(n) == floor_phi_u64(n) + 1);
    }
}

TEST_CASE("QuadRat comparison and sign") {
    const QuadRat phi = QuadRat::phi();
    CHECK(qr_cmp(phi, QuadRat(Rational(3, 2))) == greater);
    CHECK(qr_cmp(phi, phi) == std::strong_ordering::equal);
    CHECK(qr_cmp(phi, QuadRat(Rational(13, 8))) == less);
    const QuadRat thr = QuadRat::inv_sqrt5_phi();
    CHECK(qr_cmp(thr, QuadRat(Rational(28, 100))) == less);
    CHECK(qr_cmp(thr, QuadRat(Rational(27, 100))) == greater);
    // Mixed-sign coefficients exercise the cross-multiplication branch.
    CHECK(QuadRat(Rational(3), Rational(-1)).sign() == 1);   // 3 - sqrt5 > 0
    CHECK(QuadRat(Rational(2), Rational(-1)).sign() == -1);  // 2 - sqrt5 < 0
    CHECK(QuadRat(Rational(-2), Rational(1)).sign() == 1);   // sqrt5 - 2 > 0
    CHECK(QuadRat(Rational(0)).sign() == 0);
    CHECK(phi.to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));
}

TEST_CASE("phi_pow recurrence and inverses") {
    const QuadRat phi = QuadRat::phi();
    CHECK(QuadRat::phi_pow(1) == phi);
    CHECK(QuadRat::phi_pow(0) == QuadRat(Rational(1)));
    for (long p = -10; p <= 10; ++p) {
        CHECK(QuadRat::phi_pow(p + 2) == QuadRat::phi_pow(p + 1) + QuadRat::phi_pow(p));
        CHECK(QuadRat::phi_pow(p) * QuadRat::phi_pow(-p) == QuadRat(Rational(1)));
        CHECK(QuadRat::phi_pow(p) * phi == QuadRat::phi_pow(p + 1));
    }
}

TEST_CASE("phi_decompose examples and uniqueness of p") {
    CHECK(phi_decompose(1).p == 3);
    CHECK(phi_decompose(std::uint64_t{10'000}).p == 22);
    for (unsigned long n = 1; n <= 100'000; ++n) {
        const auto d = phi_decompose(BigInt(n));
        const QuadRat five_n{Rational(5 * BigInt(n)), Rational(0)};
        // phi^p <= 5n < phi^(p+1); either side shifted by one must fail.
        CHECK(qr_cmp(QuadRat::phi_pow(d.p), five_n) != greater);
        CHECK(qr_cmp(QuadRat::phi_pow(d.p + 1), five_n) == greater);
        CHECK((QuadRat::phi_pow(d.p).x + QuadRat::phi_pow(d.p).x) ==
              Rational(d.lucas_p));
        CHECK(d.c >= 0.447213);
        CHECK(d.c < 0.7236068);
    }
    const auto d1 = phi_decompose(std::uint64_t{1});
    CHECK(d1.lucas_p == lucas(3));
    CHECK(d1.fib_p == fib(3));
}
