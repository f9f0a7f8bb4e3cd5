#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psden/arith.hpp"

namespace psden {

enum class TheoremId {
    T1Parity,
    T2Denominator,
    T3Integrality,
    C2Relations,
    T4Quotients,
    T5Quotients,
    L1Congruence,
    AMIntegrality,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T1Parity,    TheoremId::T2Denominator, TheoremId::T3Integrality, TheoremId::C2Relations,
    TheoremId::T4Quotients, TheoremId::T5Quotients,   TheoremId::L1Congruence,  TheoremId::AMIntegrality,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

struct SweepOptions {
    std::uint64_t max_n = 0;
    std::uint64_t m_max = 0;  // ignored by sweeps without an m axis
    std::uint64_t r_max = 0;  // likewise for r
    unsigned jobs = 1;
};

/// Default ranges per theorem; jobs defaults to the hardware concurrency.
SweepOptions default_sweep_options(TheoremId id);

struct SweepFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct SweepReport {
    TheoremId id;
    std::string range;
    std::uint64_t checked = 0;
    std::vector<SweepFailure> failures;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const { return failures.empty(); }
};

/// Runs one sweep. Work is split across opts.jobs workers, each with its own
/// Bernoulli cache; failures come back in index order regardless of jobs.
SweepReport run_sweep(TheoremId id, const SweepOptions& opts);

}  // namespace psden
