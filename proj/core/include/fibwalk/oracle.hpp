#pragma once

// Deliberately naive brute-force references used to validate the
// characterization, reverse-walk and density paths on small inputs.  Nothing
// here consults floor_phi or the decomposition triple: walks are run
// forward by repeated addition, and every comparison against phi*m is done by
// definitional integer square comparisons.

#include <cstdint>
#include <vector>

#include "fibwalk/budget.hpp"
#include "fibwalk/characterization.hpp"
#include "fibwalk/exact.hpp"

namespace fibwalk::oracle {

struct OracleResult {
    std::uint64_t n = 0;
    int s = 0;
    std::vector<core::GoodPair> pairs;  // all maximizers, enumeration order
};

/// Enumerates every start pair (a1, a2) with 1 <= a1, a2 <= n and walks each
/// until it meets or passes n.  Budget: n <= 10^5.
OracleResult brute_slow(std::uint64_t n);

/// One sweep over all pairs <= limit, producing brute_slow results for every
/// n in [1, limit] at once.  Budget: limit <= 2*10^4.
std::vector<OracleResult> brute_slow_all(std::uint64_t limit);

enum class DensityKind { TwoGood, Down, Paradox };

/// Per-m boolean stream for m in [2, limit] (index m of the returned vector),
/// computed only from brute_slow walks and definitional comparisons.
/// d is the paradox threshold, used only for DensityKind::Paradox.
/// Budget: limit <= 10^4.
std::vector<std::uint8_t> brute_density(std::uint64_t limit, DensityKind kind,
                                        const exact::Rational& d = exact::Rational(1, 2));

/// floor(phi*m) by an independent route: long-double estimate corrected by
/// integer square comparisons against 5 m^2.
std::uint64_t definitional_floor_phi(std::uint64_t m);

}  // namespace fibwalk::oracle
