#pragma once

// The direct fingerprint pipeline: prefix signs, the Sp map, the tau
// function and extraction of the Weyl-group pair [alpha; beta].

#include "fingerprint/partition.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fingerprint {

/// Per-index record of mu = Sp(lambda). mu may hold 0 where a single-box
/// part was deleted; mu_partition() drops those.
struct SpTrace {
    std::vector<int> lambda;
    std::vector<int> mu;
    std::vector<int> sign;               // p_lambda(i), +1 or -1
    std::vector<int> partial_sum_delta;  // sum_{k<=i} mu_k - lambda_k

    [[nodiscard]] std::size_t size() const { return lambda.size(); }
    [[nodiscard]] bool changed(std::size_t i) const { return mu[i] != lambda[i]; }
    [[nodiscard]] Partition mu_partition() const;

    friend bool operator==(const SpTrace&, const SpTrace&) = default;
};

enum class Condition { I, II, III };

[[nodiscard]] std::string_view to_string(Condition c);

struct ConditionSet {
    bool i = true;
    bool ii = true;
    bool iii = true;

    [[nodiscard]] bool contains(Condition c) const;
    friend bool operator==(const ConditionSet&, const ConditionSet&) = default;
};

/// Parses "i,ii,iii" (any subset, any order). Throws std::invalid_argument.
[[nodiscard]] ConditionSet parse_conditions(std::string_view text);
[[nodiscard]] std::string format_conditions(const ConditionSet& c);

enum class IiiVariant { So, Sp, Vacuous };

[[nodiscard]] std::string_view to_string(IiiVariant v);
[[nodiscard]] std::optional<IiiVariant> parse_iii_variant(std::string_view text);
/// SO for B and D, Sp for C.
[[nodiscard]] IiiVariant default_iii_variant(Theory t);

struct FingerprintOptions {
    CombineMode combine_mode = CombineMode::Interleave;
    TieBreak tie_break = TieBreak::PrimeFirst;
    ConditionSet conditions;
    /// Unset means the theory default.
    std::optional<IiiVariant> iii_variant;

    [[nodiscard]] IiiVariant resolved_variant(Theory t) const
    {
        return iii_variant.value_or(default_iii_variant(t));
    }
    friend bool operator==(const FingerprintOptions&, const FingerprintOptions&) = default;
};

struct TauEntry {
    int tau = 1;
    /// The first condition found to hold (in index order) when tau = -1.
    std::optional<Condition> witness;
    std::optional<std::size_t> witness_index;

    friend bool operator==(const TauEntry&, const TauEntry&) = default;
};

/// tau on the distinct positive even values of mu.
using TauTable = std::map<int, TauEntry>;

struct WeylPair {
    Partition alpha;
    Partition beta;
    int rank = 0;

    [[nodiscard]] bool rank_consistent() const { return alpha.total() + beta.total() == rank; }
    friend bool operator==(const WeylPair&, const WeylPair&) = default;
};

/// An odd value, or an even value with tau = +1, left without a partner.
struct ExtractionDiagnostic {
    int value = 0;
    int multiplicity = 0;
    int tau = 1;

    [[nodiscard]] std::string message() const;
    friend bool operator==(const ExtractionDiagnostic&, const ExtractionDiagnostic&) = default;
};

using Extraction = std::variant<WeylPair, ExtractionDiagnostic>;

[[nodiscard]] std::vector<int> prefix_signs(std::span<const int> values);

/// mu_i = lambda_i + p(i) when lambda_i is odd and lambda_i != lambda_{i-p(i)},
/// otherwise lambda_i; lambda_{l+1} = 0.
[[nodiscard]] SpTrace sp_map(std::span<const int> values);

[[nodiscard]] TauTable tau_table(const SpTrace& trace, const TaggedPartition& tags,
                                 Theory theory, const FingerprintOptions& opts);

[[nodiscard]] Extraction extract_weyl_pair(const SpTrace& trace, const TauTable& tau, int rank);

struct FingerprintResult {
    OperatorPair pair;
    FingerprintOptions options;  // iii_variant resolved
    TaggedPartition tagged;
    SpTrace trace;
    TauTable tau;
    Extraction outcome;

    [[nodiscard]] bool ok() const { return std::holds_alternative<WeylPair>(outcome); }
    [[nodiscard]] const WeylPair& weyl() const { return std::get<WeylPair>(outcome); }
    [[nodiscard]] const ExtractionDiagnostic& diagnostic() const
    {
        return std::get<ExtractionDiagnostic>(outcome);
    }
    [[nodiscard]] bool prime_rigid() const { return pair.prime_rigid(); }
    [[nodiscard]] bool dprime_rigid() const { return pair.dprime_rigid(); }
};

/// combine -> sp_map -> tau_table -> extract_weyl_pair. Rigidity is not
/// required.
[[nodiscard]] FingerprintResult fingerprint(const OperatorPair& pair,
                                            const FingerprintOptions& opts = {});

/// Runs tau and extraction on an already computed trace.
[[nodiscard]] FingerprintResult finish_fingerprint(const OperatorPair& pair,
                                                   const FingerprintOptions& opts,
                                                   TaggedPartition tagged, SpTrace trace);

}  // namespace fingerprint
