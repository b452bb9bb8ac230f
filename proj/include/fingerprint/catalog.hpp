#pragma once

// Catalog records (one JSON object per fingerprint computation), fiber
// grouping and ASCII rendering used by the command-line front end.

#include "fingerprint/blocks.hpp"
#include "fingerprint/engine.hpp"
#include "fingerprint/partition.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fingerprint {

struct BlockInfo {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string kind;
    std::optional<std::string> operator_label;

    friend bool operator==(const BlockInfo&, const BlockInfo&) = default;
};

struct CatalogRecord {
    Theory theory = Theory::B;
    int rank = 0;
    Partition lambda_prime;
    Partition lambda_dprime;
    CombineMode combine_mode = CombineMode::Interleave;
    IiiVariant iii_variant = IiiVariant::So;
    TieBreak tie_break = TieBreak::PrimeFirst;
    ConditionSet conditions;
    Partition mu;
    std::optional<Partition> alpha;  // absent when extraction failed
    std::optional<Partition> beta;
    std::vector<ExtractionDiagnostic> diagnostics;
    std::vector<BlockInfo> blocks;

    friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Blocks are filled for interleaved results and left empty otherwise.
[[nodiscard]] CatalogRecord make_record(const FingerprintResult& result);

/// Field order is fixed: theory, rank, lambda_prime, lambda_dprime,
/// combine_mode, iii_variant, tie_break, conditions, mu, alpha, beta,
/// diagnostics, blocks. Partitions are arrays of parts.
[[nodiscard]] nlohmann::ordered_json to_json(const CatalogRecord& r);
/// Throws std::invalid_argument on a malformed record.
[[nodiscard]] CatalogRecord record_from_json(const nlohmann::json& j);
/// One line of JSONL, without the trailing newline.
[[nodiscard]] std::string to_jsonl(const CatalogRecord& r);

[[nodiscard]] nlohmann::ordered_json partition_json(const Partition& p);

struct Fiber {
    WeylPair weyl;
    std::vector<OperatorPair> members;
};

struct FiberReport {
    std::vector<Fiber> fibers;          // only fibers with >= 2 members
    std::size_t classes = 0;            // distinct classes examined
    std::vector<OperatorPair> failed;   // pairs whose extraction failed
};

/// Groups the rigid pairs of the given rank by fingerprint. In D a pair
/// and its swap count as one class (first enumerated wins). Fibers are
/// ordered by the enumeration position of their first member.
[[nodiscard]] FiberReport compute_fibers(Theory theory, int rank,
                                         const FingerprintOptions& opts = {});

/// Text form "(2^2 1 ; 1^2)" with ∅ for an empty side.
[[nodiscard]] std::string format_pair(const OperatorPair& pair);
/// Text form "[2 1 ; ∅]".
[[nodiscard]] std::string format_weyl(const WeylPair& w);

/// Rows of '#' for lambda' (and summed) rows, '*' for lambda'' rows,
/// followed by the image mu. Block boundaries are drawn when given.
[[nodiscard]] std::string render_diagram(const FingerprintResult& result,
                                         const std::vector<Block>& blocks);

}  // namespace fingerprint
