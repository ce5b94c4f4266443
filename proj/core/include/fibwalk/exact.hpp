#pragma once

// Exact integer and Z[sqrt5] arithmetic: Fibonacci/Lucas numbers, integer
// square roots, floor/ceil of phi*n, and sign-exact comparison of numbers of
// the form x + y*sqrt(5) with rational x, y.  No floating point is involved
// in any comparison; doubles appear only as informational hints.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fibwalk::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// f_k with f_1 = f_2 = 1 and the conventions f_0 = 0, f_{-1} = 1.
/// Rejects k < -1.
BigInt fib(long k);

/// L_k = f_{k-1} + f_{k+1}, with L_0 = 2, L_1 = 1.  Requires k >= 0.
BigInt lucas(long k);

/// floor(sqrt(x)) for x >= 0, Newton iteration with a final monotone
/// correction so the result r always satisfies r^2 <= x < (r+1)^2.
BigInt isqrt(const BigInt& x);

/// floor(phi * n) for n >= 1, computed as (n + isqrt(5 n^2)) div 2.
BigInt floor_phi(const BigInt& n);

/// ceil(phi * n) = floor(phi * n) + 1; phi*n is never an integer for n >= 1.
BigInt ceil_phi(const BigInt& n);

/// Convenience for callers working in machine words.  Requires n >= 1 and
/// the result to fit in 64 bits.
std::uint64_t floor_phi_u64(std::uint64_t n);
std::uint64_t ceil_phi_u64(std::uint64_t n);

// An exact number x + y*sqrt(5) with rational coefficients, canonicalized by
// mpq.  Carrier for phi, phi^p, delta_n, Delta_n and every threshold used by
// the density and gap machinery.
struct QuadRat {
    Rational x;  // rational part
    Rational y;  // coefficient of sqrt(5)

    QuadRat() = default;
    QuadRat(Rational rx, Rational ry) : x(std::move(rx)), y(std::move(ry)) {}
    explicit QuadRat(const Rational& r) : x(r), y(0) {}
    explicit QuadRat(long v) : x(v), y(0) {}

    /// -1, 0 or +1, decided by integer cross-multiplication.
    int sign() const;

    double to_double() const;

    QuadRat operator-() const { return {-x, -y}; }
    QuadRat& operator+=(const QuadRat& o);
    QuadRat& operator-=(const QuadRat& o);
    QuadRat& operator*=(const QuadRat& o);

    friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
    friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
    friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }

    friend bool operator==(const QuadRat& a, const QuadRat& b) {
        return a.x == b.x && a.y == b.y;
    }

    /// phi = (1 + sqrt5)/2.
    static QuadRat phi();
    /// phi^p for any integer p, materialized as (L_p + F_p sqrt5)/2 with the
    /// standard negative-index extensions of F and L.
    static QuadRat phi_pow(long p);
    static QuadRat sqrt5() { return {Rational(0), Rational(1)}; }
    /// The paradox threshold 1/(sqrt5 * phi) = (5 - sqrt5)/10.
    static QuadRat inv_sqrt5_phi();

    std::string str() const;
};

std::strong_ordering qr_cmp(const QuadRat& v, const QuadRat& w);

inline std::strong_ordering operator<=>(const QuadRat& a, const QuadRat& b) {
    return qr_cmp(a, b);
}

// The unique p with phi^p <= 5n < phi^(p+1), i.e. n = (1/sqrt5) c phi^p with
// 1/sqrt5 <= c < phi/sqrt5.  The pair (lucas_p, fib_p) witnesses exactness:
// phi^p = (lucas_p + fib_p sqrt5)/2.  c is a double hint for the asymptotic
// density formulas.
struct PhiDecomposition {
    BigInt n;
    long p = 0;
    double c = 0.0;
    BigInt lucas_p;
    BigInt fib_p;
};

PhiDecomposition phi_decompose(const BigInt& n);
PhiDecomposition phi_decompose(std::uint64_t n);

}  // namespace fibwalk::exact
