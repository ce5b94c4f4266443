#include "fibwalk/magic.hpp"

#include <stdexcept>

#include "fibwalk/core.hpp"

namespace fibwalk::magic {

namespace {

using u64 = std::uint64_t;
using exact::QuadRat;
using exact::Rational;

// Shared recovery for both moduli.  N = c1*a + mod*b with starts in
// [1, mod]; inv is c1^{-1} mod mod.
TrickPrediction recover(u64 N, u64 c1, u64 mod, u64 inv, u64 n1, u64 n2) {
    const u64 lowest = c1 + mod;
    const u64 highest = (c1 + mod) * mod;
    if (N < lowest || N > highest)
        throw std::invalid_argument("trick input outside any valid walk");
    u64 a = (inv * N) % mod;
    if (a == 0) a = mod;
    if (c1 * a > N || (N - c1 * a) % mod != 0)
        throw std::invalid_argument("trick input not produced by a valid walk");
    const u64 b = (N - c1 * a) / mod;
    if (b < 1 || b > mod)
        throw std::invalid_argument("trick input not produced by a valid walk");
    TrickPrediction out;
    out.recovered_a = static_cast<int>(a);
    out.recovered_b = static_cast<int>(b);
    out.next_value = n1 * a + n2 * b;
    out.input = N;
    // Replay: the reported value and the prediction must both appear.
    const auto w = core::walk(a, b, 16);
    bool seen_n = false, seen_next = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == N && w[i + 1] == out.next_value) seen_n = seen_next = true;
    }
    if (!seen_n || !seen_next)
        throw std::logic_error("trick replay validation failed");
    return out;
}

}  // namespace

TrickPrediction trick1_predict(u64 N) {
    // w7 = 5a + 8b; 5*5 = 25 = 1 mod 8.
    return recover(N, 5, 8, 5, 8, 13);
}

TrickPrediction trick1_predict_13(u64 N) {
    // w8 = 8a + 13b; 8*5 = 40 = 1 mod 13.
    return recover(N, 8, 13, 5, 13, 21);
}

u64 trick2_predict(u64 a_k) {
    if (a_k < 1) throw std::invalid_argument("trick2 requires a positive term");
    const u64 fl = exact::floor_phi_u64(a_k);
    // delta vs 1/2 decided exactly; phi*a_k is never a half-integer.
    const auto ord = qr_cmp(core::delta(a_k), QuadRat(Rational(1, 2)));
    return ord == std::strong_ordering::less ? fl : fl + 1;
}

bool check_trick2(u64 N, int k) {
    if (k < 1) throw std::invalid_argument("check_trick2 requires k >= 1");
    // N < phi^{k-1}/2 + phi
    QuadRat bound = QuadRat::phi_pow(k - 1) * QuadRat(Rational(1, 2)) + QuadRat::phi();
    return qr_cmp(QuadRat(Rational(static_cast<unsigned long>(N))), bound) ==
           std::strong_ordering::less;
}

int trick2_min_index(u64 N) {
    for (int k = 1;; ++k)
        if (check_trick2(N, k)) return k;
}

}  // namespace fibwalk::magic
