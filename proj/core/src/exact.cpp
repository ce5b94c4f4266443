#include "fibwalk/exact.hpp"

#include <cmath>
#include <utility>

namespace fibwalk::exact {

namespace {

// Fast doubling: returns (f_k, f_{k+1}) for k >= 0.
std::pair<BigInt, BigInt> fib_pair(unsigned long k) {
    if (k == 0) return {BigInt(0), BigInt(1)};
    auto [a, b] = fib_pair(k / 2);  // a = f_m, b = f_{m+1}
    BigInt c = a * (2 * b - a);     // f_{2m}
    BigInt d = a * a + b * b;       // f_{2m+1}
    if (k % 2 == 0) return {c, d};
    return {d, c + d};
}

}  // namespace

BigInt fib(long k) {
    if (k < -1) throw std::invalid_argument("fib: index must be >= -1");
    if (k == -1) return 1;
    return fib_pair(static_cast<unsigned long>(k)).first;
}

BigInt lucas(long k) {
    if (k < 0) throw std::invalid_argument("lucas: index must be >= 0");
    auto [fk, fk1] = fib_pair(static_cast<unsigned long>(k));
    return 2 * fk1 - fk;  // L_k = f_{k+1} + f_{k-1} = 2 f_{k+1} - f_k
}

BigInt isqrt(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    if (x == 0) return 0;
    // Newton iteration from an over-estimate; the sequence is decreasing
    // once it passes the root, so we stop when it stops decreasing.
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, (mpz_sizeinbase(x.get_mpz_t(), 2) + 1) / 2 + 1);
    for (;;) {
        BigInt next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    // Monotone correction: r may overshoot by one after the loop.
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

BigInt floor_phi(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("floor_phi: n must be >= 1");
    // floor(n*sqrt5) = isqrt(5 n^2) since sqrt(5 n^2) is irrational, and
    // n + floor(n*sqrt5) is always odd+odd or even+even... the halving is a
    // plain floor division, which tests pin against a 50-digit oracle.
    return (n + isqrt(5 * n * n)) / 2;
}

BigInt ceil_phi(const BigInt& n) { return floor_phi(n) + 1; }

std::uint64_t floor_phi_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("floor_phi: n must be >= 1");
    // 5 n^2 fits 128 bits for any 64-bit n below ~2.6e18.
    if (n > 2'000'000'000'000'000'000ULL)
        throw std::overflow_error("floor_phi_u64: n too large");
    unsigned __int128 sq = static_cast<unsigned __int128>(n) * n * 5;
    // Seed from long double, then correct; long double has 64 mantissa bits.
    auto r = static_cast<std::uint64_t>(
        sqrtl(static_cast<long double>(sq)));
    while (static_cast<unsigned __int128>(r) * r > sq) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= sq) ++r;
    return (n + r) / 2;
}

std::uint64_t ceil_phi_u64(std::uint64_t n) { return floor_phi_u64(n) + 1; }

int QuadRat::sign() const {
    const int sx = sgn(x);
    const int sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Mixed signs: compare x^2 with 5 y^2; the larger magnitude wins.
    const Rational x2 = x * x;
    const Rational y25 = 5 * y * y;
    const int mag = cmp(x2, y25);
    if (mag == 0) return 0;  // cannot happen for nonzero y (sqrt5 irrational)
    return mag > 0 ? sx : sy;
}

double QuadRat::to_double() const {
    return x.get_d() + y.get_d() * std::sqrt(5.0);
}

QuadRat& QuadRat::operator+=(const QuadRat& o) {
    x += o.x;
    y += o.y;
    return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) {
    x -= o.x;
    y -= o.y;
    return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
    Rational nx = x * o.x + 5 * y * o.y;
    Rational ny = x * o.y + y * o.x;
    x = std::move(nx);
    y = std::move(ny);
    return *this;
}

QuadRat QuadRat::phi() { return {Rational(1, 2), Rational(1, 2)}; }

QuadRat QuadRat::phi_pow(long p) {
    const unsigned long m = static_cast<unsigned long>(p < 0 ? -p : p);
    BigInt f = fib(static_cast<long>(m));
    BigInt l = lucas(static_cast<long>(m));
    if (p < 0) {
        // F_{-m} = (-1)^{m+1} F_m, L_{-m} = (-1)^m L_m
        if (m % 2 == 0) f = -f; else l = -l;
    }
    return {Rational(l) / 2, Rational(f) / 2};
}

QuadRat QuadRat::inv_sqrt5_phi() { return {Rational(1, 2), Rational(-1, 10)}; }

std::string QuadRat::str() const {
    return x.get_str() + " + " + y.get_str() + "*sqrt5";
}

std::strong_ordering qr_cmp(const QuadRat& v, const QuadRat& w) {
    const int s = (v - w).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

PhiDecomposition phi_decompose(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("phi_decompose: n must be >= 1");
    // Find the unique p with phi^p <= 5n < phi^(p+1).  Since phi^p is
    // irrational for p != 0 both comparisons are strict in practice; we walk
    // p upward from a float estimate's neighborhood.  p grows like
    // log_phi(5n), so the scan is logarithmic.
    const BigInt five_n = 5 * n;
    const QuadRat target{Rational(five_n), Rational(0)};
    long p = 0;
    while (qr_cmp(QuadRat::phi_pow(p + 1), target) != std::strong_ordering::greater)
        ++p;
    PhiDecomposition out;
    out.n = n;
    out.p = p;
    out.lucas_p = lucas(p);
    out.fib_p = fib(p);
    // c = sqrt5 * n / phi^p, informational only.
    out.c = std::sqrt(5.0) * n.get_d() / std::pow((1.0 + std::sqrt(5.0)) / 2.0, static_cast<double>(p));
    return out;
}

PhiDecomposition phi_decompose(std::uint64_t n) {
    return phi_decompose(BigInt(static_cast<unsigned long>(n)));
}

}  // namespace fibwalk::exact
