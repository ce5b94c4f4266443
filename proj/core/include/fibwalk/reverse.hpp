#pragma once

// Reverse Fibonacci walks R(n,b), the K-interval decomposition of (0,1),
// and the O(log n) computation of all n-good pairs.

#include <cstdint>
#include <utility>
#include <vector>

#include "fibwalk/characterization.hpp"
#include "fibwalk/exact.hpp"

namespace fibwalk::reverse {

/// R(n,b): r1 = n, r2 = b, r_{k+2} = r_k - r_{k+1}, truncated at the last
/// positive term.  t_rev = terms.size() is the walk length t(n,b); it is not the
/// t of the characterization triple.
struct ReverseWalk {
    std::uint64_t n = 0;
    std::uint64_t b = 0;
    std::vector<std::uint64_t> terms;
    int t_rev = 0;
};

ReverseWalk reverse_walk(std::uint64_t n, std::uint64_t b);

/// Half-open interval of b/n values with t(n,b) = m.
/// m = 2u+1: (f_{2u-2}/f_{2u-1}, f_{2u}/f_{2u+1}];
/// m = 2u+2: [f_{2u+1}/f_{2u+2}, f_{2u-1}/f_{2u}).
struct KInterval {
    int m = 3;
    exact::Rational lower;
    exact::Rational upper;
    bool lower_closed = false;
    bool upper_closed = false;

    bool contains(const exact::Rational& x) const;
};

KInterval k_interval(int m);

/// The unique m >= 3 with b/n in K_m, via exact comparison against
/// consecutive Fibonacci convergents.
int k_locate(std::uint64_t n, std::uint64_t b);

/// Builds R(floor(phi n), n) and R(ceil(phi n), n); the longer one's terminal
/// pair is (a(n), b(n)) and every good pair follows from it.  A length tie
/// is an invariant violation, not a choice.
std::pair<core::Characterization, std::vector<core::GoodPair>>
fast_good_pairs(std::uint64_t n);

}  // namespace fibwalk::reverse
