#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace atanderiv {

/// One failed comparison inside a verification sweep.
struct Mismatch {
    unsigned n = 0;
    std::optional<unsigned> m;
    std::optional<std::string> point;
    std::string label;  // what was compared, e.g. "lhs/rhs" or "fdb/oracle"
    std::string lhs;
    std::string rhs;
};

std::string describe(Mismatch const& mm);

struct CheckReport {
    std::string check;
    unsigned n_max = 0;
    std::size_t cases = 0;
    std::vector<Mismatch> failures;  // in sweep order; front() is the first divergence

    bool passed() const { return failures.empty(); }
};

/// Sweep knobs.  inject_fault adds 1 to one computed value in the last case of
/// a sweep so the failure path can be exercised end to end.
struct CheckOptions {
    bool inject_fault = false;
};

}  // namespace atanderiv
