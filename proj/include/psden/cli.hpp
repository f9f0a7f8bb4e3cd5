#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "psden/arith.hpp"

namespace psden::cli {

// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTheoremViolation = 3;

enum class SequenceId { D, DD, DB, DDQ, DBQ };
enum class Format { Csv, BFile };

std::optional<SequenceId> parse_sequence_id(std::string_view name);
std::string_view to_string(SequenceId id);

/// Whether index n belongs to the sequence (DDQ: odd n, DBQ: even n, others: all n >= 1).
bool has_index(SequenceId id, std::uint64_t n);

/// Term n computed by the closed-form route.
BigInt sequence_term(SequenceId id, std::uint64_t n);

/// Writes terms from..to. Indices outside the sequence are skipped with a note on `notes`.
void write_sequence(SequenceId id, std::uint64_t from, std::uint64_t to, Format format, std::ostream& out,
                    std::ostream& notes);

/// Reads "index value" lines; blank lines and '#' comments are ignored.
std::vector<std::pair<BigInt, BigInt>> parse_bfile(std::istream& in);

struct BenchRecord {
    SequenceId sequence;
    std::uint64_t from;
    std::uint64_t to;
    unsigned reps;
    std::chrono::nanoseconds formula_time;  // mean per repetition
    std::chrono::nanoseconds oracle_time;
    Rational speedup;                       // oracle_time / formula_time
};

/// Checks that both routes agree on every index, then times them.
/// Disagreement throws TheoremViolation before anything is timed.
/// Only D, DD and DB have an oracle route.
BenchRecord run_bench(SequenceId id, std::uint64_t from, std::uint64_t to, unsigned reps);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psden::cli
