#pragma once

// Exhaustive invariant suites over enumerated inputs. Each suite reports
// the number of cases examined and the first counterexamples found.

#include "fingerprint/engine.hpp"
#include "fingerprint/partition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fingerprint {

struct CheckReport {
    std::string suite;
    int max_rank = 0;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;  // capped, first found first
    std::vector<std::string> notes;            // informational lines

    [[nodiscard]] bool passed() const { return counterexamples.empty(); }
    void fail(std::string what);
};

/// structure, sp-locality, parity, rank-identity, condition-ii, shift,
/// factorization, path-equivalence, closed-form, collapse-bijection.
[[nodiscard]] const std::vector<std::string>& check_suites();
/// 12 for unipotent sweeps, 8 for pair sweeps, 6 for shift.
[[nodiscard]] int default_check_rank(std::string_view suite);

/// Runs a suite up to max_rank (its default when unset). Partition-level
/// sweeps (sp-locality, parity) cover every theory-valid partition of
/// total <= 2 * max_rank. Throws std::invalid_argument for an unknown suite.
[[nodiscard]] CheckReport run_check(std::string_view suite, std::optional<int> max_rank = {});

/// Transposed-diagram row patterns of rigid partitions.
[[nodiscard]] bool transpose_pattern_holds(const Partition& p, Theory t);

/// Checks change locality of a trace: increments only on the first row of
/// a value group with sign +, decrements only on the last row with sign -.
[[nodiscard]] bool sp_changes_local(const SpTrace& trace);

/// Every odd value of mu has even multiplicity.
[[nodiscard]] bool sp_odd_values_paired(const SpTrace& trace);

/// The shifted-pair prediction: alpha_i + 2, beta_i + 1, plus one beta
/// part 1 for every deleted box of the unshifted trace (its 0 becomes 2).
[[nodiscard]] WeylPair predicted_shift(const WeylPair& w, const SpTrace& trace);

struct GappedCase {
    Partition partition;
    Theory theory;
    Extraction with_ii;
    Extraction without_ii;
};

/// Theory-valid non-rigid partitions with a gap, total <= max_total, whose
/// unipotent fingerprint changes when condition (ii) is dropped.
[[nodiscard]] std::vector<GappedCase> condition_ii_sensitive_cases(int max_total,
                                                                   std::size_t* examined = nullptr);

}  // namespace fingerprint
