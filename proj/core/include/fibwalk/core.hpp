#pragma once

// The characterization engine: for each n >= 2 the unique (a, b, t), s(n),
// all n-good pairs, down/up classification, the exact fractional parts
// delta_n / Delta_n, and the paradox predicate.

#include <cstdint>
#include <vector>

#include "fibwalk/characterization.hpp"
#include "fibwalk/exact.hpp"

namespace fibwalk::core {

using exact::QuadRat;
using exact::Rational;

/// (w1, ..., w_len) from positive starts.  Satisfies the closed form
/// w_k = second*f_{k-1} + first*f_{k-2}.
std::vector<std::uint64_t> walk(std::uint64_t first, std::uint64_t second,
                                std::size_t len);

/// The unique decomposition triple (a, b, t) for n >= 2.  O(log n) via the reverse-walk
/// algorithm, with a direct search for n < 8.
Characterization characterize(std::uint64_t n);

/// All n-good pairs, canonical (b, a) first; at most two.
std::vector<GoodPair> good_pairs(std::uint64_t n);

/// s(n) for n >= 1; s(1) = 2 is the degenerate family w_k(a, 1).
int slow_steps(std::uint64_t n);

Classification classify(std::uint64_t n);

/// delta_n = phi*n - floor(phi*n), exactly.
QuadRat delta(std::uint64_t n);
/// Delta_n = ceil(phi*n) - phi*n, exactly; delta(n) + Delta(n) == 1.
QuadRat Delta(std::uint64_t n);

/// n is d-paradoxical if (delta_n < d and n in U) or (Delta_n < d and n in D).
/// Requires 0 < d <= 1/2; all comparisons exact.
bool is_paradoxical(std::uint64_t n, const Rational& d);
/// Same predicate with a Z[sqrt5] threshold, e.g. d = 1/(sqrt5*phi).
bool is_paradoxical(std::uint64_t n, const QuadRat& d);

}  // namespace fibwalk::core
