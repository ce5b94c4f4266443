#include "fibwalk/gaps.hpp"

#include <deque>
#include <stdexcept>

#include "fibwalk/core.hpp"

namespace fibwalk::gaps {

namespace {

using u64 = std::uint64_t;

void check_ell(int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
}

}  // namespace

u64 SetStream::next() {
    for (;;) {
        ++m_;
        const bool down = core::characterize(m_).t % 2 == 0;
        if ((set_ == Kind::Down) == down) return m_;
    }
}

std::vector<u64> stream(Kind set, u64 limit) {
    if (limit < 2) throw std::invalid_argument("stream: limit must be >= 2");
    std::vector<u64> out;
    SetStream s(set);
    for (u64 x = s.next(); x <= limit; x = s.next()) out.push_back(x);
    return out;
}

std::set<u64> gap_set(Kind set, int ell, u64 limit) {
    check_ell(ell);
    std::set<u64> gapset;
    SetStream s(set);
    std::deque<u64> window;
    bool any = false;
    for (;;) {
        const u64 x = s.next();
        if (x > limit) break;
        window.push_back(x);
        if (window.size() > static_cast<std::size_t>(ell) + 1) window.pop_front();
        if (window.size() == static_cast<std::size_t>(ell) + 1) {
            gapset.insert(window.back() - window.front());
            any = true;
        }
    }
    if (!any)
        throw std::invalid_argument("gap_set: limit yields fewer than ell+1 elements");
    return gapset;
}

GapRecord witness(Kind set, int ell, u64 gap_value, u64 limit) {
    check_ell(ell);
    GapRecord rec;
    rec.set = set;
    rec.ell = ell;
    rec.gap = gap_value;
    SetStream s(set);
    std::deque<u64> window;
    u64 k = 0;  // index of window.front() once full
    for (;;) {
        const u64 x = s.next();
        if (x > limit) break;
        window.push_back(x);
        if (window.size() > static_cast<std::size_t>(ell) + 1) window.pop_front();
        if (window.size() == static_cast<std::size_t>(ell) + 1) {
            ++k;
            if (window.back() - window.front() == gap_value) {
                rec.found = true;
                rec.k = k;
                rec.element = window.front();
                rec.partner = window.back();
                return rec;
            }
        }
    }
    return rec;
}

exact::Rational gap_density(Kind set, int ell, u64 gap_value, u64 limit) {
    check_ell(ell);
    SetStream s(set);
    std::deque<u64> window;
    u64 hits = 0, valid = 0;
    for (;;) {
        const u64 x = s.next();
        if (x > limit) break;
        window.push_back(x);
        if (window.size() > static_cast<std::size_t>(ell) + 1) window.pop_front();
        if (window.size() == static_cast<std::size_t>(ell) + 1) {
            ++valid;
            if (window.back() - window.front() == gap_value) ++hits;
        }
    }
    if (valid == 0)
        throw std::invalid_argument("gap_density: limit yields no valid indices");
    exact::Rational r(static_cast<unsigned long>(hits), static_cast<unsigned long>(valid));
    r.canonicalize();
    return r;
}

}  // namespace fibwalk::gaps
