#include "fibwalk/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fibwalk/core.hpp"

namespace fibwalk::density {

namespace {

using u64 = std::uint64_t;

constexpr double kSqrt5 = 2.23606797749978969641;
constexpr double kPhi = 1.61803398874989484820;

double phi_pow(double e) { return std::pow(kPhi, e); }

bool scan_flag(u64 m, SeriesKind kind, const exact::QuadRat& dq) {
    switch (kind) {
        case SeriesKind::T:
            return core::characterize(m).second_pair_exists;
        case SeriesKind::D:
            return core::characterize(m).t % 2 == 0;
        case SeriesKind::P:
            return core::is_paradoxical(m, dq);
    }
    return false;
}

// Counts flagged m in [lo, hi], snapshotting at every checkpoint that falls
// inside the range.  checkpoint_counts[i] receives the within-range count of
// flagged m <= checkpoints[i] for checkpoints in [lo, hi].
void scan_range(u64 lo, u64 hi, SeriesKind kind, const exact::QuadRat& dq,
                const std::vector<u64>& checkpoints,
                std::vector<u64>& checkpoint_counts, u64& total) {
    u64 count = 0;
    std::size_t ci = 0;
    while (ci < checkpoints.size() && checkpoints[ci] < lo) ++ci;
    for (u64 m = lo; m <= hi; ++m) {
        if (scan_flag(m, kind, dq)) ++count;
        while (ci < checkpoints.size() && checkpoints[ci] == m) {
            checkpoint_counts[ci] = count;
            ++ci;
        }
    }
    total = count;
}

}  // namespace

DensitySeries empirical_scan(u64 limit, SeriesKind kind,
                             const std::vector<u64>& checkpoints,
                             const Rational& d, int threads) {
    if (limit < 2) throw std::invalid_argument("empirical_scan: limit must be >= 2");
    exact::QuadRat dq{d};
    if (kind == SeriesKind::P &&
        (dq.sign() <= 0 || cmp(d, Rational(1, 2)) > 0))
        throw std::invalid_argument("paradox threshold must lie in (0, 1/2]");

    std::vector<u64> cps = checkpoints;
    std::sort(cps.begin(), cps.end());
    std::vector<u64> counts(cps.size(), 0);

    if (threads < 1) threads = 1;
    const u64 span = limit - 1;  // m = 2..limit
    if (static_cast<u64>(threads) > span) threads = static_cast<int>(span);

    if (threads == 1) {
        u64 total = 0;
        scan_range(2, limit, kind, dq, cps, counts, total);
    } else {
        std::vector<std::vector<u64>> part_counts(threads, std::vector<u64>(cps.size(), 0));
        std::vector<u64> part_totals(threads, 0);
        std::vector<u64> lows(threads), highs(threads);
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) {
            lows[i] = 2 + span * i / threads;
            highs[i] = 1 + span * (i + 1) / threads;
            pool.emplace_back(scan_range, lows[i], highs[i], kind, std::cref(dq),
                              std::cref(cps), std::ref(part_counts[i]),
                              std::ref(part_totals[i]));
        }
        for (auto& th : pool) th.join();
        // Prefix-merge: a checkpoint inside chunk i adds the totals of all
        // chunks before it.
        u64 prefix = 0;
        int chunk = 0;
        for (std::size_t ci = 0; ci < cps.size(); ++ci) {
            while (chunk < threads && cps[ci] > highs[chunk]) {
                prefix += part_totals[chunk];
                ++chunk;
            }
            counts[ci] = prefix + (chunk < threads ? part_counts[chunk][ci] : 0);
        }
    }

    DensitySeries out;
    out.kind = kind;
    out.d = d;
    out.limit = limit;
    out.points.reserve(cps.size());
    for (std::size_t i = 0; i < cps.size(); ++i) {
        DensityPoint pt;
        pt.n = cps[i];
        pt.count = counts[i];
        pt.empirical = static_cast<double>(counts[i]) / static_cast<double>(cps[i]);
        out.points.push_back(pt);
    }
    return out;
}

double theory_T(u64 n) {
    const auto pd = exact::phi_decompose(n);
    const double c = pd.c;
    if (pd.p % 2 != 0) return 1.0 / (2.0 * kSqrt5 * phi_pow(4) * c);
    const double seam = (1.0 + phi_pow(-3)) / kSqrt5;
    if (c <= seam)
        return kSqrt5 / 2.0 * c + (1.0 + phi_pow(-5)) / (2.0 * kSqrt5 * c) - 1.0;
    return 1.0 - kSqrt5 / 2.0 * c / kPhi - (1.0 + phi_pow(-2)) / (2.0 * kSqrt5 * c);
}

double theory_D(u64 n) {
    const auto pd = exact::phi_decompose(n);
    const double c = pd.c;
    switch (pd.p % 4) {
        case 0: return 1.0 - 0.5 * c - 1.0 / (10.0 * c);
        case 1: return c / (2.0 * kPhi) + kPhi / (10.0 * c);
        case 2: return 0.5 * c + 1.0 / (10.0 * c);
        default: return 1.0 - c / (2.0 * kPhi) - kPhi / (10.0 * c);
    }
}

double theory_D_compact(u64 n) {
    const auto pd = exact::phi_decompose(n);
    const long q = pd.p % 2 != 0 ? pd.p : pd.p - 1;  // odd q with phi^q <= 5n < phi^{q+2}
    const double nn = static_cast<double>(n);
    const double term = kSqrt5 * nn / (2.0 * phi_pow(static_cast<double>(q + 1))) +
                        phi_pow(static_cast<double>(q + 1)) / (10.0 * kSqrt5 * nn);
    return q % 4 == 1 ? term : 1.0 - term;
}

double theory_P(u64 n, const Rational& d) {
    exact::QuadRat dq{d};
    if (dq.sign() <= 0 || cmp(d, Rational(1, 2)) > 0)
        throw std::invalid_argument("paradox threshold must lie in (0, 1/2]");
    // P(n, d) = 0 below the paradox threshold 1/(sqrt5*phi), compared exactly.
    if (qr_cmp(dq, exact::QuadRat::inv_sqrt5_phi()) != std::strong_ordering::greater)
        return 0.0;
    const auto pd = exact::phi_decompose(n);
    const double c = pd.c;
    const double dd = d.get_d();
    const double thr = 1.0 / (kSqrt5 * kPhi);
    if (pd.p % 2 != 0) {
        if (c <= kPhi * dd)
            return -0.5 * c / kPhi + dd + (dd * dd - dd + 0.5 / (kSqrt5 * kPhi)) / c;
        return kSqrt5 / 2.0 * kPhi * (dd - thr) * (dd - thr) / c;
    }
    if (c <= dd)
        return -0.5 * c + dd +
               ((dd * dd - dd) / kPhi + 0.5 / (kSqrt5 * kPhi * kPhi)) / c;
    if (c <= 1.0 - dd)
        return kSqrt5 / 2.0 * (dd - thr) * (dd - thr) / c;
    return 0.5 * c + dd - 1.0 +
           (kPhi * (dd * dd - dd) + 0.5 * kPhi * kPhi / kSqrt5) / c;
}

double theory_P_half(u64 n) {
    const auto pd = exact::phi_decompose(n);
    const double c = pd.c;
    if (pd.p % 2 != 0)
        return -0.5 * c / kPhi + 0.5 + (0.5 / (kSqrt5 * kPhi) - 0.25) / c;
    if (c <= 0.5)
        return -0.5 * c + 0.5 + (0.5 / (kSqrt5 * kPhi * kPhi) - 0.25 / kPhi) / c;
    return 0.5 * c - 0.5 + (0.5 * kPhi * kPhi / kSqrt5 - 0.25 * kPhi) / c;
}

DensitySeries scan_with_theory(u64 limit, SeriesKind kind, u64 step,
                               const Rational& d, int threads) {
    if (step < 1 || step > limit)
        throw std::invalid_argument("scan_with_theory: step must be in [1, limit]");
    std::vector<u64> cps;
    for (u64 n = step; n <= limit; n += step)
        if (n >= 2) cps.push_back(n);
    DensitySeries s = empirical_scan(limit, kind, cps, d, threads);
    s.step = step;
    for (auto& pt : s.points) {
        switch (kind) {
            case SeriesKind::T: pt.theory = theory_T(pt.n); break;
            case SeriesKind::D: pt.theory = theory_D(pt.n); break;
            case SeriesKind::P: pt.theory = theory_P(pt.n, d); break;
        }
        pt.abs_error = std::abs(pt.empirical - pt.theory);
    }
    return s;
}

}  // namespace fibwalk::density
