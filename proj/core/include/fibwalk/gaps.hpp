#pragma once

// The ordered sets D (down-integers) and U (up-integers), their gap sets
// D_ell / U_ell, first-occurrence witnesses, and observed gap-value
// densities.  Streams are lazy so multi-million scans run in constant memory.

#include <cstdint>
#include <set>
#include <vector>

#include "fibwalk/characterization.hpp"
#include "fibwalk/exact.hpp"

namespace fibwalk::gaps {

using core::Kind;

/// Lazily yields the elements of D or U in increasing order.
class SetStream {
  public:
    explicit SetStream(Kind set) : set_(set) {}

    /// Next element; grows without bound, caller stops when done.
    std::uint64_t next();

  private:
    Kind set_;
    std::uint64_t m_ = 1;
};

/// All members <= limit in increasing order.
std::vector<std::uint64_t> stream(Kind set, std::uint64_t limit);

/// All observed values of x_{k+ell} - x_k with x_{k+ell} <= limit.
/// Throws if fewer than ell+1 elements exist below the limit.
std::set<std::uint64_t> gap_set(Kind set, int ell, std::uint64_t limit);

struct GapRecord {
    Kind set = Kind::Down;
    int ell = 0;
    std::uint64_t gap = 0;
    std::uint64_t k = 0;        // 1-based index of x_k
    std::uint64_t element = 0;  // x_k
    std::uint64_t partner = 0;  // x_{k+ell}
    bool found = false;
};

/// First k attaining x_{k+ell} - x_k = gap_value, or found=false.
GapRecord witness(Kind set, int ell, std::uint64_t gap_value, std::uint64_t limit);

/// (#k with x_{k+ell} - x_k = gap_value and x_{k+ell} <= limit) / (#valid k).
exact::Rational gap_density(Kind set, int ell, std::uint64_t gap_value,
                            std::uint64_t limit);

}  // namespace fibwalk::gaps
