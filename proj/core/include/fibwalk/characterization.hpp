#pragma once

#include <cstdint>
#include <vector>

namespace fibwalk::core {

/// A walk start (w1, w2).  The canonical pair for n is (first, second) =
/// (b(n), a(n)); replaying the walk from it reaches n at step s(n).
struct GoodPair {
    std::uint64_t first = 0;
    std::uint64_t second = 0;

    friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// The unique (a, b, t) with n = a*f_t + b*f_{t-1}, t >= 2, 1 <= a <= b <= f_t,
/// plus s = t + 1 and whether a second good pair exists (a > f_{t-1}).
struct Characterization {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    int t = 0;
    int s = 0;
    bool second_pair_exists = false;

    friend bool operator==(const Characterization&, const Characterization&) = default;
};

enum class Kind { Down, Up };

/// Down iff t(n) even.  next_values lists w_{s+1} for each good pair,
/// canonical pair first.
struct Classification {
    std::uint64_t n = 0;
    Kind kind = Kind::Down;
    std::vector<std::uint64_t> next_values;
};

}  // namespace fibwalk::core
