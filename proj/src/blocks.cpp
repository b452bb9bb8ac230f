#include "fingerprint/blocks.hpp"

#include <algorithm>

namespace fingerprint {

std::string_view to_string(BlockKind k)
{
    switch (k) {
    case BlockKind::I: return "I";
    case BlockKind::II: return "II";
    case BlockKind::III: return "III";
    case BlockKind::S: return "S";
    }
    return "?";
}

std::string_view to_string(OperatorLabel l)
{
    switch (l) {
    case OperatorLabel::E11: return "mu_e11";
    case OperatorLabel::E12: return "mu_e12";
    case OperatorLabel::E21: return "mu_e21";
    case OperatorLabel::E22: return "mu_e22";
    case OperatorLabel::O11: return "mu_o11";
    case OperatorLabel::O12: return "mu_o12";
    case OperatorLabel::O21: return "mu_o21";
    case OperatorLabel::O22: return "mu_o22";
    case OperatorLabel::E1: return "mu_e1";
    case OperatorLabel::E2: return "mu_e2";
    case OperatorLabel::O1: return "mu_o1";
    case OperatorLabel::O2: return "mu_o2";
    case OperatorLabel::II: return "mu_II";
    }
    return "?";
}

namespace {

bool top_group_mixed(const Block& b, const TaggedPartition& tp)
{
    const int top = tp.rows[b.begin].value;
    const Origin first = tp.rows[b.begin].origin;
    for (std::size_t i = b.begin; i < b.end && tp.rows[i].value == top; ++i)
        if (tp.rows[i].origin != first)
            return true;
    return false;
}

void classify(Block& b, const TaggedPartition& tp, Theory theory, bool last)
{
    std::size_t primes = 0;
    for (std::size_t i = b.begin; i < b.end; ++i)
        if (tp.rows[i].origin == Origin::Prime)
            ++primes;
    const std::size_t dprimes = b.size() - primes;

    if (last && theory != Theory::C) {
        b.kind = BlockKind::I;
        const bool odd = b.boxes % 2 != 0;
        const bool mixed = top_group_mixed(b, tp);
        b.label = odd ? (mixed ? OperatorLabel::O1 : OperatorLabel::O2)
                      : (mixed ? OperatorLabel::E1 : OperatorLabel::E2);
        return;
    }

    if (primes == 0 || dprimes == 0) {
        bool c_pattern = true;
        std::size_t i = b.begin;
        while (i < b.end) {
            std::size_t j = i;
            while (j < b.end && tp.rows[j].value == tp.rows[i].value)
                ++j;
            if (tp.rows[i].value % 2 != 0 && (j - i) % 2 != 0)
                c_pattern = false;
            i = j;
        }
        if (c_pattern) {
            b.kind = BlockKind::II;
            b.label = OperatorLabel::II;
        } else {
            b.kind = BlockKind::S;
        }
        return;
    }

    const Origin inserted = primes <= dprimes ? Origin::Prime : Origin::Dprime;
    std::size_t first = b.end, last_row = b.begin;
    int run_boxes = 0;
    for (std::size_t i = b.begin; i < b.end; ++i) {
        if (tp.rows[i].origin != inserted)
            continue;
        first = std::min(first, i);
        last_row = i;
        run_boxes += tp.rows[i].value;
    }
    bool contiguous = true;
    for (std::size_t i = first; i <= last_row; ++i)
        if (tp.rows[i].origin != inserted)
            contiguous = false;
    if (!contiguous) {
        b.kind = BlockKind::S;
        return;
    }
    b.kind = BlockKind::III;
    const bool upper_inside = first > b.begin;
    const bool lower_inside = last_row + 1 < b.end;
    static constexpr OperatorLabel even_labels[2][2] = {
        {OperatorLabel::E22, OperatorLabel::E21}, {OperatorLabel::E12, OperatorLabel::E11}};
    static constexpr OperatorLabel odd_labels[2][2] = {
        {OperatorLabel::O22, OperatorLabel::O21}, {OperatorLabel::O12, OperatorLabel::O11}};
    b.label = (run_boxes % 2 == 0 ? even_labels : odd_labels)[upper_inside][lower_inside];
}

}  // namespace

std::vector<Block> decompose_blocks(const TaggedPartition& tp, Theory theory)
{
    if (tp.mode != CombineMode::Interleave)
        throw std::invalid_argument("decompose_blocks: requires an interleaved partition");
    std::vector<Block> blocks;
    const auto& rows = tp.rows;
    if (rows.empty())
        return blocks;

    std::size_t start = 0;
    int above = 0;
    int cumulative = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        cumulative += rows[i].value;
        const bool boundary = i + 1 < rows.size() && cumulative % 2 == 0 &&
                              rows[i].value != rows[i + 1].value;
        if (boundary || i + 1 == rows.size()) {
            Block b;
            b.begin = start;
            b.end = i + 1;
            b.entry_parity = above % 2;
            b.boxes = cumulative - above;
            blocks.push_back(b);
            start = i + 1;
            above = cumulative;
        }
    }
    for (std::size_t k = 0; k < blocks.size(); ++k)
        classify(blocks[k], tp, theory, k + 1 == blocks.size());
    return blocks;
}

SpTrace block_sp(const Block& b, const TaggedPartition& tp)
{
    SpTrace frag;
    int parity = b.entry_parity;
    std::size_t i = b.begin;
    while (i < b.end) {
        const int value = tp.rows[i].value;
        std::size_t j = i;
        while (j < b.end && tp.rows[j].value == value)
            ++j;
        const bool minus_entering = parity % 2 != 0;
        const std::size_t offset = frag.lambda.size();
        for (std::size_t k = i; k < j; ++k) {
            parity += value;
            frag.lambda.push_back(value);
            frag.mu.push_back(value);
            frag.sign.push_back(parity % 2 == 0 ? 1 : -1);
        }
        if (value % 2 != 0) {
            if (minus_entering)
                frag.mu[offset] = value + 1;
            if (parity % 2 != 0)
                frag.mu[offset + (j - i) - 1] = value - 1;
        }
        i = j;
    }
    int delta = 0;
    for (std::size_t k = 0; k < frag.lambda.size(); ++k) {
        delta += frag.mu[k] - frag.lambda[k];
        frag.partial_sum_delta.push_back(delta);
    }
    return frag;
}

SpTrace join_fragments(const std::vector<SpTrace>& fragments)
{
    SpTrace whole;
    int offset = 0;
    for (const auto& f : fragments) {
        whole.lambda.insert(whole.lambda.end(), f.lambda.begin(), f.lambda.end());
        whole.mu.insert(whole.mu.end(), f.mu.begin(), f.mu.end());
        whole.sign.insert(whole.sign.end(), f.sign.begin(), f.sign.end());
        for (int d : f.partial_sum_delta)
            whole.partial_sum_delta.push_back(offset + d);
        if (!f.partial_sum_delta.empty())
            offset += f.partial_sum_delta.back();
    }
    return whole;
}

FingerprintResult block_fingerprint(const OperatorPair& pair, const FingerprintOptions& opts)
{
    if (opts.combine_mode != CombineMode::Interleave)
        throw std::invalid_argument("block_fingerprint: requires interleave mode");
    TaggedPartition tagged = combine(pair, CombineMode::Interleave, opts.tie_break);
    const auto blocks = decompose_blocks(tagged, pair.theory());
    std::vector<SpTrace> fragments;
    fragments.reserve(blocks.size());
    for (const auto& b : blocks)
        fragments.push_back(block_sp(b, tagged));
    return finish_fingerprint(pair, opts, std::move(tagged), join_fragments(fragments));
}

}  // namespace fingerprint
