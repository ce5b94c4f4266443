#pragma once

// Invariant batteries behind `fibwalk verify`: each suite replays a family of
// proved statements against the implementation and reports pass/fail with a
// counterexample when one exists.

#include <cstdint>
#include <string>
#include <vector>

namespace fibwalk::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::uint64_t checked = 0;  // how many instances were exercised
    std::string detail;         // counterexample or summary
};

using Report = std::vector<CheckResult>;

/// Characterization vs the brute-force oracle on [1, limit]; limit <= 2*10^4.
Report suite_char(std::uint64_t limit);

/// Gap sets for ell = 1, 2 plus the documented witnesses.
Report suite_gaps(std::uint64_t limit);

/// No n <= limit is paradoxical at 1/(sqrt5*phi), nor at 27/100; plus the
/// one-sided threshold implications and the ell <= 5 covering property.
Report suite_paradox(std::uint64_t limit);

/// k_locate == reverse-walk length for all b < n <= min(limit, 2000);
/// partition geometry of the K intervals; no three consecutive b maximal.
Report suite_kintervals(std::uint64_t limit);

/// Exhaustive trick recoveries and the nearest-integer prediction sweep.
Report suite_magic();

bool all_passed(const Report& report);

}  // namespace fibwalk::verify
