#pragma once

// Streaming empirical density counters T(n), D(n), P(n,d) and the
// leading-order closed forms they are compared against.  Empirical counts
// are exact integers; the theory side evaluates asymptotic formulas in
// double precision with the O(n^{-1/2}) term dropped.

#include <cstdint>
#include <vector>

#include "fibwalk/exact.hpp"

namespace fibwalk::density {

using exact::Rational;

enum class SeriesKind { T, D, P };

struct DensityPoint {
    std::uint64_t n = 0;
    std::uint64_t count = 0;   // exact numerator of the empirical fraction
    double empirical = 0.0;    // count / n
    double theory = 0.0;
    double abs_error = 0.0;
};

struct DensitySeries {
    SeriesKind kind = SeriesKind::T;
    Rational d;  // paradox threshold, P series only
    std::uint64_t limit = 0;
    std::uint64_t step = 0;
    std::vector<DensityPoint> points;
};

/// Exact empirical counts at the given ascending checkpoints, one pass over
/// m = 2..limit.  The scan may be partitioned over `threads` disjoint ranges;
/// counters merge by addition.  Theory columns are left zero.
DensitySeries empirical_scan(std::uint64_t limit, SeriesKind kind,
                             const std::vector<std::uint64_t>& checkpoints,
                             const Rational& d = Rational(1, 2),
                             int threads = 1);

/// Leading term of the two-good-pair density T(n).
double theory_T(std::uint64_t n);

/// Leading term of the down-integer density D(n), four branches on p mod 4.
double theory_D(std::uint64_t n);
/// The same value written compactly in terms of the odd exponent q; the two
/// forms agree to rounding and tests assert it.
double theory_D_compact(std::uint64_t n);

/// Leading term of the d-paradoxical density P(n, d); exactly zero when
/// d <= 1/(sqrt5*phi).  Requires 0 < d <= 1/2.
double theory_P(std::uint64_t n, const Rational& d);

/// The specialized three-branch d = 1/2 formula; theory_P(n, 1/2) equals it.
double theory_P_half(std::uint64_t n);

/// Convenience: empirical series with theory and abs_error columns filled.
DensitySeries scan_with_theory(std::uint64_t limit, SeriesKind kind,
                               std::uint64_t step,
                               const Rational& d = Rational(1, 2),
                               int threads = 1);

}  // namespace fibwalk::density
