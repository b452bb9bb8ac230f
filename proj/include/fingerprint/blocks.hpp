#pragma once

// Block decomposition of an interleaved operator pair. The merged rows are
// cut wherever the boxes above are even in number and the value changes;
// the Sp map then acts on each block independently, so fragments computed
// block by block reassemble into the full trace.

#include "fingerprint/engine.hpp"
#include "fingerprint/partition.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace fingerprint {

enum class BlockKind { I, II, III, S };

enum class OperatorLabel {
    E11, E12, E21, E22,
    O11, O12, O21, O22,
    E1, E2, O1, O2,
    II,
};

[[nodiscard]] std::string_view to_string(BlockKind k);
/// "mu_e11", ..., "mu_II".
[[nodiscard]] std::string_view to_string(OperatorLabel l);

struct Block {
    std::size_t begin = 0;  // first row index
    std::size_t end = 0;    // one past the last row
    BlockKind kind = BlockKind::S;
    std::optional<OperatorLabel> label;
    int entry_parity = 0;   // parity of the boxes above the block
    int boxes = 0;

    [[nodiscard]] std::size_t size() const { return end - begin; }
    friend bool operator==(const Block&, const Block&) = default;
};

/// Cuts and classifies. Classification:
///  - I: the block holding the smallest rows, in B or D, where the leading
///    rows of both partitions end. Label mu_o* when its box count is odd,
///    mu_e* otherwise; digit 1 when its top value group mixes origins.
///  - II: rows of a single origin forming a C-type fragment (odd values in
///    pairs). Label mu_II.
///  - III: both origins, the minority origin's rows contiguous. Label
///    mu_{e|o}{1|2}{1|2}: parity of the inserted run's boxes; 1 if the
///    other origin has rows above (resp. below) the run inside the block.
///  - S: anything else; no label.
/// Throws std::invalid_argument for a Componentwise partition.
[[nodiscard]] std::vector<Block> decompose_blocks(const TaggedPartition& tp, Theory theory);

/// Sp applied to the block's rows alone, with the sign seeded from the
/// block's entry parity. Uses the group-level rule: an odd group gains a
/// box on its first row when the sign entering it is -, and loses one on
/// its last row when the sign at its end is -. Rows outside the block are
/// treated as different values. partial_sum_delta is local to the block.
[[nodiscard]] SpTrace block_sp(const Block& b, const TaggedPartition& tp);

/// Concatenates fragments in index order.
[[nodiscard]] SpTrace join_fragments(const std::vector<SpTrace>& fragments);

/// Fingerprint through the block path; options must use Interleave.
[[nodiscard]] FingerprintResult block_fingerprint(const OperatorPair& pair,
                                                  const FingerprintOptions& opts = {});

}  // namespace fingerprint
