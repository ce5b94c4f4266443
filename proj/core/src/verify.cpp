#include "fibwalk/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fibwalk/core.hpp"
#include "fibwalk/gaps.hpp"
#include "fibwalk/magic.hpp"
#include "fibwalk/oracle.hpp"
#include "fibwalk/reverse.hpp"

namespace fibwalk::verify {

namespace {

using u64 = std::uint64_t;
using exact::QuadRat;
using exact::Rational;

std::string set_str(const std::set<u64>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (u64 v : s) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << "}";
    return os.str();
}

CheckResult check(std::string name, bool passed, u64 checked, std::string detail = "") {
    return {std::move(name), passed, checked, std::move(detail)};
}

}  // namespace

bool all_passed(const Report& report) {
    return std::all_of(report.begin(), report.end(),
                       [](const CheckResult& c) { return c.passed; });
}

Report suite_char(u64 limit) {
    Report rep;
    const auto oracle = oracle::brute_slow_all(limit);
    bool s_ok = true, pairs_ok = true;
    std::string bad_s, bad_pairs;
    for (u64 n = 1; n <= limit; ++n) {
        if (core::slow_steps(n) != oracle[n].s) {
            s_ok = false;
            bad_s = "n=" + std::to_string(n);
            break;
        }
        if (n < 2) continue;  // degenerate family, no unique pair
        if (core::good_pairs(n) != oracle[n].pairs) {
            pairs_ok = false;
            bad_pairs = "n=" + std::to_string(n);
            break;
        }
    }
    rep.push_back(check("slow_steps matches brute-force oracle", s_ok, limit, bad_s));
    rep.push_back(check("good pairs match brute-force oracle", pairs_ok, limit - 1, bad_pairs));
    return rep;
}

Report suite_gaps(u64 limit) {
    Report rep;
    const std::set<u64> want1{1, 2, 3, 5};
    const std::set<u64> want2{2, 3, 4, 5, 6, 8, 10};
    const auto d1 = gaps::gap_set(core::Kind::Down, 1, limit);
    const auto u1 = gaps::gap_set(core::Kind::Up, 1, limit);
    const auto d2 = gaps::gap_set(core::Kind::Down, 2, limit);
    const auto u2 = gaps::gap_set(core::Kind::Up, 2, limit);
    rep.push_back(check("consecutive down gaps = {1,2,3,5}", d1 == want1, limit, set_str(d1)));
    rep.push_back(check("consecutive up gaps = {1,2,3,5}", u1 == want1, limit, set_str(u1)));
    rep.push_back(check("skip-one down gaps = {2,3,4,5,6,8,10}", d2 == want2, limit, set_str(d2)));
    rep.push_back(check("skip-one up gaps = {2,3,4,5,6,8,10}", u2 == want2, limit, set_str(u2)));
    if (limit >= 1000) {
        const auto w6 = gaps::witness(core::Kind::Down, 2, 6, limit);
        rep.push_back(check("first down gap 6 is d53-d51 = 102-96",
                            w6.found && w6.k == 51 && w6.element == 96 && w6.partner == 102,
                            limit));
        const auto w10 = gaps::witness(core::Kind::Down, 2, 10, limit);
        rep.push_back(check("first down gap 10 is d374-d372 = 756-746",
                            w10.found && w10.k == 372 && w10.element == 746 && w10.partner == 756,
                            limit));
    }
    if (limit >= 2000) {
        const auto wu = gaps::witness(core::Kind::Up, 2, 10, limit);
        rep.push_back(check("first up gap 10 is u961-u959 = 1927-1917",
                            wu.found && wu.k == 959 && wu.element == 1917 && wu.partner == 1927,
                            limit));
    }
    return rep;
}

Report suite_paradox(u64 limit) {
    Report rep;
    const QuadRat thr = QuadRat::inv_sqrt5_phi();
    const Rational d27(27, 100);
    bool none_thr = true, none_27 = true, oneside = true;
    std::string bad;
    for (u64 n = 2; n <= limit; ++n) {
        if (core::is_paradoxical(n, thr)) {
            none_thr = false;
            bad = "n=" + std::to_string(n);
            break;
        }
        if (core::is_paradoxical(n, d27)) {
            none_27 = false;
            bad = "n=" + std::to_string(n);
            break;
        }
        // delta_n below the threshold forces down, Delta_n below forces up.
        const bool down = core::characterize(n).t % 2 == 0;
        const QuadRat dn = core::delta(n);
        if (qr_cmp(dn, thr) == std::strong_ordering::less && !down) {
            oneside = false;
            bad = "n=" + std::to_string(n);
            break;
        }
        if (qr_cmp(QuadRat(Rational(1)) - dn, thr) == std::strong_ordering::less && down) {
            oneside = false;
            bad = "n=" + std::to_string(n);
            break;
        }
    }
    rep.push_back(check("no n paradoxical at 1/(sqrt5*phi)", none_thr, limit - 1, bad));
    rep.push_back(check("no n paradoxical at 27/100", none_27, limit - 1, bad));
    rep.push_back(check("sub-threshold delta/Delta forces the class", oneside, limit - 1, bad));

    // Covering: some 1 <= ell <= 5 pushes delta (resp. Delta) below the
    // threshold; checked on a capped prefix since delta math is exact mpq.
    const u64 cap = std::min<u64>(limit, 10'000);
    bool cover = true;
    std::string bad_cover;
    for (u64 n = 1; n <= cap && cover; ++n) {
        bool found_d = false, found_D = false;
        for (u64 ell = 1; ell <= 5; ++ell) {
            if (qr_cmp(core::delta(n + ell), thr) == std::strong_ordering::less) found_d = true;
            if (qr_cmp(core::Delta(n + ell), thr) == std::strong_ordering::less) found_D = true;
        }
        if (!found_d || !found_D) {
            cover = false;
            bad_cover = "n=" + std::to_string(n);
        }
    }
    rep.push_back(check("every n has delta and Delta dips within 5 steps", cover, cap, bad_cover));
    return rep;
}

Report suite_kintervals(u64 limit) {
    Report rep;
    const u64 cap = std::min<u64>(limit, 2000);
    bool locate_ok = true, three_ok = true;
    std::string bad_loc, bad_three;
    for (u64 n = 2; n <= cap; ++n) {
        int best_m = 0;
        int run = 0, best_run = 0;
        for (u64 b = 1; b < n; ++b) {
            const int m = reverse::k_locate(n, b);
            if (m != reverse::reverse_walk(n, b).t_rev) {
                locate_ok = false;
                bad_loc = "n=" + std::to_string(n) + " b=" + std::to_string(b);
            }
            if (m > best_m) best_m = m;
        }
        // A second pass for the run length inside the maximal interval.
        for (u64 b = 1; b < n; ++b) {
            if (reverse::k_locate(n, b) == best_m) {
                ++run;
                best_run = std::max(best_run, run);
            } else {
                run = 0;
            }
        }
        if (best_run > 2) {
            three_ok = false;
            bad_three = "n=" + std::to_string(n);
        }
    }
    rep.push_back(check("k_locate equals reverse-walk length", locate_ok, cap, bad_loc));
    rep.push_back(check("at most two consecutive b in the maximal interval", three_ok, cap, bad_three));

    // Geometry: intervals tile (0,1) with complementary closure and length
    // 1/(f_{m-2} f_m).
    bool geom_ok = true;
    std::string bad_geom;
    for (int u = 1; u <= 40 && geom_ok; ++u) {
        for (int parity = 0; parity < 2 && geom_ok; ++parity) {
            const int m = parity == 0 ? 2 * u + 1 : 2 * u + 2;
            const auto k = reverse::k_interval(m);
            const Rational len = k.upper - k.lower;
            const Rational want = Rational(1) /
                (Rational(exact::fib(m - 2)) * Rational(exact::fib(m)));
            if (len != want || k.lower_closed == k.upper_closed) {
                geom_ok = false;
                bad_geom = "m=" + std::to_string(m);
            }
            // Adjacent interval on the same side shares the endpoint with
            // flipped closure.
            const auto next = reverse::k_interval(m + 2);
            const Rational shared = parity == 0 ? k.upper : k.lower;
            const Rational nb = parity == 0 ? next.lower : next.upper;
            if (shared != nb) {
                geom_ok = false;
                bad_geom = "m=" + std::to_string(m);
            }
        }
    }
    rep.push_back(check("K-interval lengths and shared endpoints", geom_ok, 80, bad_geom));
    return rep;
}

Report suite_magic() {
    Report rep;
    bool t8 = true, t13 = true, t2 = true;
    std::string bad;
    for (int a = 1; a <= 8 && t8; ++a)
        for (int b = 1; b <= 8 && t8; ++b) {
            const auto w = core::walk(a, b, 8);
            const auto p = magic::trick1_predict(w[6]);
            if (p.recovered_a != a || p.recovered_b != b || p.next_value != w[7]) {
                t8 = false;
                bad = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            }
        }
    rep.push_back(check("mod-8 trick recovers all 64 start pairs", t8, 64, bad));
    for (int a = 1; a <= 13 && t13; ++a)
        for (int b = 1; b <= 13 && t13; ++b) {
            const auto w = core::walk(a, b, 9);
            const auto p = magic::trick1_predict_13(w[7]);
            if (p.recovered_a != a || p.recovered_b != b || p.next_value != w[8]) {
                t13 = false;
                bad = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            }
        }
    rep.push_back(check("mod-13 trick recovers all 169 start pairs", t13, 169, bad));
    u64 cases = 0;
    for (u64 a1 = 1; a1 <= 25 && t2; ++a1)
        for (u64 a2 = a1; a2 <= 25 && t2; ++a2) {
            const auto w = core::walk(a1, a2, 12);  // 9 additions -> w11, w12
            ++cases;
            if (magic::trick2_predict(w[10]) != w[11]) {
                t2 = false;
                bad = "a1=" + std::to_string(a1) + " a2=" + std::to_string(a2);
            }
        }
    rep.push_back(check("nearest-integer trick predicts w12 for all 325 pairs", t2, cases, bad));
    rep.push_back(check("minimal valid addition count for 25 is 9",
                        magic::trick2_min_index(25) == 9, 1));
    return rep;
}

}  // namespace fibwalk::verify
