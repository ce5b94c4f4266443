#include "fibwalk/core.hpp"

#include <stdexcept>

#include "fibwalk/reverse.hpp"

namespace fibwalk::core {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Exhaustive scan over t for the handful of n the reverse-walk path does not
// cover; also doubles as an in-module cross-check for tiny inputs.
Characterization direct_characterize(u64 n) {
    std::vector<u64> f = {0, 1, 1};  // f_0, f_1, f_2
    while (f.back() <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    Characterization found;
    int hits = 0;
    for (int t = 2; t + 1 < static_cast<int>(f.size()); ++t) {
        for (u64 a = 1; a <= f[t] && a * f[t] <= n; ++a) {
            const u64 rest = n - a * f[t];
            if (rest % f[t - 1] != 0) continue;
            const u64 b = rest / f[t - 1];
            if (b < a || b > f[t]) continue;
            found = {n, a, b, t, t + 1, a > f[t - 1]};
            ++hits;
        }
    }
    if (hits != 1) throw std::logic_error("characterization not unique");
    return found;
}

}  // namespace

std::vector<u64> walk(u64 first, u64 second, std::size_t len) {
    if (first < 1 || second < 1)
        throw std::invalid_argument("walk starts must be positive");
    if (len < 1) throw std::invalid_argument("walk length must be >= 1");
    std::vector<u64> w;
    w.reserve(len);
    w.push_back(first);
    if (len > 1) w.push_back(second);
    while (w.size() < len) w.push_back(w[w.size() - 1] + w[w.size() - 2]);
    return w;
}

Characterization characterize(u64 n) {
    if (n < 2) throw std::invalid_argument("characterize requires n >= 2");
    if (n < 8) return direct_characterize(n);
    return reverse::fast_good_pairs(n).first;
}

std::vector<GoodPair> good_pairs(u64 n) {
    if (n < 2) throw std::invalid_argument("good_pairs requires n >= 2");
    if (n < 8) {
        const Characterization ch = direct_characterize(n);
        std::vector<u64> f = {0, 1, 1};
        while (static_cast<int>(f.size()) <= ch.t) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
        std::vector<GoodPair> pairs{{ch.b, ch.a}};
        if (ch.second_pair_exists)
            pairs.push_back({ch.b + f[ch.t], ch.a - f[ch.t - 1]});
        return pairs;
    }
    return reverse::fast_good_pairs(n).second;
}

int slow_steps(u64 n) {
    if (n < 1) throw std::invalid_argument("slow_steps requires n >= 1");
    if (n == 1) return 2;  // w_k(a, 1) for any a >= 1
    return characterize(n).s;
}

Classification classify(u64 n) {
    const Characterization ch = characterize(n);
    Classification cl;
    cl.n = n;
    cl.kind = ch.t % 2 == 0 ? Kind::Down : Kind::Up;
    const u64 next = cl.kind == Kind::Down ? exact::floor_phi_u64(n)
                                           : exact::ceil_phi_u64(n);
    cl.next_values.push_back(next);
    if (ch.second_pair_exists)
        cl.next_values.push_back(cl.kind == Kind::Down ? next - 1 : next + 1);
    return cl;
}

QuadRat delta(u64 n) {
    if (n < 1) throw std::invalid_argument("delta requires n >= 1");
    const exact::BigInt fl = exact::floor_phi(exact::BigInt(static_cast<unsigned long>(n)));
    // phi*n = n/2 + (n/2) sqrt5
    return {Rational(static_cast<unsigned long>(n)) / 2 - Rational(fl),
            Rational(static_cast<unsigned long>(n)) / 2};
}

QuadRat Delta(u64 n) { return QuadRat(Rational(1)) - delta(n); }

bool is_paradoxical(u64 n, const Rational& d) {
    return is_paradoxical(n, QuadRat(d));
}

bool is_paradoxical(u64 n, const QuadRat& d) {
    if (n < 2) throw std::invalid_argument("is_paradoxical requires n >= 2");
    if (d.sign() <= 0 || qr_cmp(d, QuadRat(Rational(1, 2))) == std::strong_ordering::greater)
        throw std::invalid_argument("paradox threshold must lie in (0, 1/2]");
    const Characterization ch = characterize(n);
    const bool is_down = ch.t % 2 == 0;
    if (is_down)
        return qr_cmp(Delta(n), d) == std::strong_ordering::less;
    return qr_cmp(delta(n), d) == std::strong_ordering::less;
}

}  // namespace fibwalk::core
