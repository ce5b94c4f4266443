#include "fibwalk/reverse.hpp"

#include <array>
#include <stdexcept>

namespace fibwalk::reverse {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// f_0 .. f_92; f_93 overflows 64 bits.
const std::array<u64, 93>& fib_table() {
    static const auto table = [] {
        std::array<u64, 93> f{};
        f[0] = 0;
        f[1] = 1;
        for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
        return f;
    }();
    return table;
}

void check_nb(u64 n, u64 b) {
    if (b < 1 || b >= n)
        throw std::invalid_argument("reverse walk requires 1 <= b < n");
}

}  // namespace

ReverseWalk reverse_walk(u64 n, u64 b) {
    check_nb(n, b);
    ReverseWalk rw;
    rw.n = n;
    rw.b = b;
    rw.terms = {n, b};
    for (;;) {
        const u64 prev = rw.terms[rw.terms.size() - 2];
        const u64 last = rw.terms.back();
        if (prev <= last) break;  // next term r_k - r_{k+1} would be <= 0
        rw.terms.push_back(prev - last);
    }
    rw.t_rev = static_cast<int>(rw.terms.size());
    return rw;
}

KInterval k_interval(int m) {
    if (m < 3) throw std::invalid_argument("K intervals start at m = 3");
    const auto& f = fib_table();
    KInterval k;
    k.m = m;
    if (m % 2 == 1) {
        const int u = (m - 1) / 2;
        k.lower = exact::Rational(f[2 * u - 2], f[2 * u - 1]);
        k.upper = exact::Rational(f[2 * u], f[2 * u + 1]);
        k.lower_closed = false;
        k.upper_closed = true;
    } else {
        const int u = (m - 2) / 2;
        k.lower = exact::Rational(f[2 * u + 1], f[2 * u + 2]);
        k.upper = exact::Rational(f[2 * u - 1], f[2 * u]);
        k.lower_closed = true;
        k.upper_closed = false;
    }
    k.lower.canonicalize();
    k.upper.canonicalize();
    return k;
}

bool KInterval::contains(const exact::Rational& v) const {
    const int lo = cmp(v, lower);
    const int hi = cmp(v, upper);
    if (lo < 0 || (lo == 0 && !lower_closed)) return false;
    if (hi > 0 || (hi == 0 && !upper_closed)) return false;
    return true;
}

int k_locate(u64 n, u64 b) {
    check_nb(n, b);
    const auto& f = fib_table();
    // b/n < 1/phi  <=>  (2b+n)^2 < 5n^2 (equality impossible: sqrt5 irrational)
    const u128 lhs = u128(2 * b + n) * (2 * b + n);
    const u128 rhs = u128(5) * n * n;
    if (lhs < rhs) {
        // Odd side: K_{2u+1} = (f_{2u-2}/f_{2u-1}, f_{2u}/f_{2u+1}].  Scanning
        // u upward, the lower bound is always satisfied once the previous
        // interval has been rejected.
        for (int u = 1;; ++u) {
            if (u128(b) * f[2 * u + 1] <= u128(n) * f[2 * u]) return 2 * u + 1;
        }
    }
    // Even side: K_{2u+2} = [f_{2u+1}/f_{2u+2}, f_{2u-1}/f_{2u}).
    for (int u = 1;; ++u) {
        if (u128(b) * f[2 * u + 2] >= u128(n) * f[2 * u + 1]) return 2 * u + 2;
    }
}

std::pair<core::Characterization, std::vector<core::GoodPair>>
fast_good_pairs(u64 n) {
    if (n < 2) throw std::invalid_argument("characterization requires n >= 2");
    const u64 lo = exact::floor_phi_u64(n);
    const ReverseWalk down = reverse_walk(lo, n);
    const ReverseWalk up = reverse_walk(lo + 1, n);
    if (down.t_rev == up.t_rev)
        throw std::logic_error("reverse walks tied; exactly one of floor/ceil "
                               "extends the slow walk");
    const ReverseWalk& best = down.t_rev > up.t_rev ? down : up;

    core::Characterization ch;
    ch.n = n;
    ch.a = best.terms[best.terms.size() - 2];
    ch.b = best.terms.back();
    ch.t = best.t_rev - 2;
    ch.s = ch.t + 1;

    const auto& f = fib_table();
    if (ch.t < 2 || ch.a < 1 || ch.a > ch.b || ch.b > f[ch.t] ||
        u128(ch.a) * f[ch.t] + u128(ch.b) * f[ch.t - 1] != n)
        throw std::logic_error("terminal pair failed characterization check");
    ch.second_pair_exists = ch.a > f[ch.t - 1];

    // Forward starts are (w1, w2) = (b, a); replay-validated by the caller's
    // tests.  Second pair per the decomposition rule.
    std::vector<core::GoodPair> pairs{{ch.b, ch.a}};
    if (ch.second_pair_exists)
        pairs.push_back({ch.b + f[ch.t], ch.a - f[ch.t - 1]});
    return {ch, pairs};
}

}  // namespace fibwalk::reverse
