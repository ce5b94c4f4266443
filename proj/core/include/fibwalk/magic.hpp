#pragma once

// Two Fibonacci-walk parlor tricks: recovering the hidden starting pair from
// one late walk value via a modular inverse, and predicting the next term of
// a long walk as the nearest integer to phi times the last term.

#include <cstdint>

#include "fibwalk/exact.hpp"

namespace fibwalk::magic {

struct TrickPrediction {
    int recovered_a = 0;  // w1
    int recovered_b = 0;  // w2
    std::uint64_t next_value = 0;
    std::uint64_t input = 0;
};

/// Starts a, b in [1, 8]; the spectator reports N = w7 = 5a + 8b.  Recovers
/// a = 5N mod 8 (residue 0 read as 8), b = (N - 5a)/8, and predicts
/// w8 = 8a + 13b.  Rejects N that no valid (a, b) produces.
TrickPrediction trick1_predict(std::uint64_t N);

/// The 1..13 variant: N = w8 = 8a + 13b, a = 5N mod 13 (0 read as 13),
/// b = (N - 8a)/13, prediction w9 = 13a + 21b.
TrickPrediction trick1_predict_13(std::uint64_t N);

/// Nearest integer to phi * a_k, via exact floor and an exact delta-vs-1/2
/// comparison.  Correct as the next walk term whenever the walk satisfies
/// the check_trick2 validity condition.
std::uint64_t trick2_predict(std::uint64_t a_k);

/// The validity inequality N < phi^{k-1}/2 + phi, evaluated exactly.
bool check_trick2(std::uint64_t N, int k);

/// Smallest k for which check_trick2(N, k) holds.
int trick2_min_index(std::uint64_t N);

}  // namespace fibwalk::magic
