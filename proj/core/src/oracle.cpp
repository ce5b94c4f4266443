#include "fibwalk/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace fibwalk::oracle {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using exact::BigInt;
using exact::Rational;

// Record every value each walk visits.  A start exceeding n is never useful:
// w1 > n can only match at step 1, and any later term is at least w1 + w2 > n,
// so enumerating a1, a2 <= limit covers all maximizers for every n <= limit.
void sweep(u64 limit, std::vector<int>& best, std::vector<std::vector<core::GoodPair>>& pairs) {
    best.assign(limit + 1, 0);
    pairs.assign(limit + 1, {});
    for (u64 a1 = 1; a1 <= limit; ++a1) {
        for (u64 a2 = 1; a2 <= limit; ++a2) {
            // Step-1 hits are never maximizers: every n is reached at step 2
            // by (x, n) and at step 3 by any a1 + a2 = n, so start at w2.
            u64 prev = a1, cur = a2;
            int k = 2;
            for (;;) {
                if (cur <= limit) {
                    if (k > best[cur]) {
                        best[cur] = k;
                        pairs[cur] = {{a1, a2}};
                    } else if (k == best[cur]) {
                        pairs[cur].push_back({a1, a2});
                    }
                } else {
                    break;
                }
                const u64 next = prev + cur;
                prev = cur;
                cur = next;
                ++k;
            }
        }
    }
}

}  // namespace

std::vector<OracleResult> brute_slow_all(u64 limit) {
    if (limit < 1 || limit > 20'000)
        throw BudgetError("brute_slow_all: limit must be in [1, 2*10^4]");
    std::vector<int> best;
    std::vector<std::vector<core::GoodPair>> pairs;
    sweep(limit, best, pairs);
    std::vector<OracleResult> out(limit + 1);
    for (u64 n = 1; n <= limit; ++n) out[n] = {n, best[n], std::move(pairs[n])};
    return out;
}

OracleResult brute_slow(u64 n) {
    if (n < 1 || n > 100'000)
        throw BudgetError("brute_slow: n must be in [1, 10^5]");
    OracleResult res{n, 0, {}};
    for (u64 a1 = 1; a1 <= n; ++a1) {
        for (u64 a2 = 1; a2 <= n; ++a2) {
            u64 prev = a1, cur = a2;
            int k = 2, hit = 0;
            if (a1 == n) hit = 1;
            while (cur <= n) {
                if (cur == n) hit = k;
                const u64 next = prev + cur;
                prev = cur;
                cur = next;
                ++k;
            }
            if (hit == 0) continue;
            if (hit > res.s) {
                res.s = hit;
                res.pairs = {{a1, a2}};
            } else if (hit == res.s) {
                res.pairs.push_back({a1, a2});
            }
        }
    }
    return res;
}

u64 definitional_floor_phi(u64 m) {
    // F is the unique integer with F < phi*m < F+1, i.e.
    // (2F - m)^2 < 5 m^2 < (2F + 2 - m)^2 with 2F - m > 0.
    auto below = [m](u64 v) {  // v < phi*m ?
        if (2 * v <= m) return true;
        return u128(2 * v - m) * (2 * v - m) < u128(5) * m * m;
    };
    auto F = static_cast<u64>(
        std::floor(static_cast<long double>(m) * 1.6180339887498948482L));
    while (!below(F)) --F;
    while (below(F + 1)) ++F;
    return F;
}

namespace {

// delta_m < d for rational d = p/q: q*m*sqrt5 < 2(q*F + p) - q*m, squared.
bool delta_below(u64 m, u64 F, const Rational& d) {
    const BigInt p = d.get_num();
    const BigInt q = d.get_den();
    const BigInt rhs = 2 * (q * F + p) - q * m;
    if (rhs <= 0) return false;
    return 5 * q * q * m * m < rhs * rhs;
}

// Delta_m < d: q*m*sqrt5 > 2(q*(F+1) - p) - q*m.
bool delta_upper_below(u64 m, u64 F, const Rational& d) {
    const BigInt p = d.get_num();
    const BigInt q = d.get_den();
    const BigInt rhs = 2 * (q * (F + 1) - p) - q * m;
    if (rhs <= 0) return true;
    return 5 * q * q * m * m > rhs * rhs;
}

}  // namespace

std::vector<std::uint8_t> brute_density(u64 limit, DensityKind kind, const Rational& d) {
    if (limit < 2 || limit > 10'000)
        throw BudgetError("brute_density: limit must be in [2, 10^4]");
    std::vector<int> best;
    std::vector<std::vector<core::GoodPair>> pairs;
    sweep(limit, best, pairs);

    std::vector<std::uint8_t> flags(limit + 1, 0);
    for (u64 m = 2; m <= limit; ++m) {
        if (kind == DensityKind::TwoGood) {
            flags[m] = pairs[m].size() >= 2;
            continue;
        }
        // Down iff some m-slow walk continues to exactly floor(phi*m).
        const u64 F = definitional_floor_phi(m);
        bool down = false, up = false;
        for (const auto& pr : pairs[m]) {
            // replay to w_{s+1}
            u64 prev = pr.first, cur = pr.second;
            for (int k = 2; k < best[m] + 1; ++k) {
                const u64 next = prev + cur;
                prev = cur;
                cur = next;
            }
            if (cur == F) down = true;
            if (cur == F + 1) up = true;
        }
        if (kind == DensityKind::Down) {
            flags[m] = down;
        } else {
            flags[m] = (up && delta_below(m, F, d)) || (down && delta_upper_below(m, F, d));
        }
    }
    return flags;
}

}  // namespace fibwalk::oracle
