#pragma once

#include <optional>

#include "cychb/instance.hpp"
#include "cychb/io_json.hpp"

namespace cychb {

struct CheckResult {
    std::string name;
    bool pass = false;
    ojson witness; // optional payload
    double ms = 0.0;
};

struct Report {
    std::string suite;
    std::string field;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string name, bool ok, ojson witness = ojson());
    /// Stable JSON; timings are opt-in so that default reports are
    /// byte-identical for a fixed seed.
    ojson to_json(bool with_timings = false) const;
};

/// Verification battery for the truncated center of A(m).
Report run_center_suite(Field f, int m, int N);

/// Rank, associativity, unit, loop identity and center of A^(m); with a fiber
/// point also the fiber checks.
Report run_reduce_suite(Field f, int m, std::optional<std::pair<FieldElem, FieldElem>> at = std::nullopt);

/// Fiber algebra at (x0, t0): simplicity, associativity, matrix iso when an
/// m-th root exists.
Report run_fiber_suite(Field f, int m, const FieldElem& x0, const FieldElem& t0);

/// Loop relation / support / round trip checks for one instance.
Report run_spectral_report(const CyclicHiggsData& H);

/// Seeded batch of random instances through the spectral-module checks.
Report run_spectral_suite(Field f, std::uint64_t seed, int count, int threads = 1);

/// Seeded batch of round trips through the divisor correspondence.
Report run_correspond_suite(Field f, std::uint64_t seed, int count, int threads = 1);

/// The full m=2 Clifford battery; with t0 also the fiber specialization.
Report run_clifford_suite(Field f, std::optional<FieldElem> fiber_t0 = std::nullopt);

} // namespace cychb
