#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingerprint/blocks.hpp"

using namespace fingerprint;

namespace {

Partition P(std::vector<int> v)
{
    return Partition(std::move(v));
}

TaggedPartition tagged(std::vector<int> values, std::vector<Origin> origins)
{
    TaggedPartition tp;
    for (std::size_t i = 0; i < values.size(); ++i)
        tp.rows.push_back({values[i], origins[i],
                           origins[i] == Origin::Prime ? std::optional<int>(values[i]) : std::nullopt});
    return tp;
}

Block whole(const TaggedPartition& tp, int entry_parity)
{
    Block b;
    b.begin = 0;
    b.end = tp.rows.size();
    b.entry_parity = entry_parity;
    b.boxes = tp.total();
    return b;
}

constexpr Origin Pr = Origin::Prime;
constexpr Origin Dp = Origin::Dprime;

}  // namespace

TEST_CASE("cut rule examples")
{
    auto one = decompose_blocks(tagged({1, 1, 1, 1, 1}, {Pr, Pr, Pr, Dp, Dp}), Theory::B);
    REQUIRE(one.size() == 1);
    CHECK(one[0].begin == 0);
    CHECK(one[0].end == 5);
    CHECK(one[0].kind == BlockKind::I);

    auto two = decompose_blocks(tagged({2, 2, 1, 1, 1}, {Pr, Pr, Pr, Dp, Dp}), Theory::B);
    REQUIRE(two.size() == 2);
    CHECK(two[0].end == 2);
    CHECK(two[1].begin == 2);
    CHECK(two[0].kind == BlockKind::II);
    CHECK(two[0].label == OperatorLabel::II);

    CHECK(decompose_blocks(TaggedPartition{}, Theory::C).empty());

    TaggedPartition sum;
    sum.mode = CombineMode::Componentwise;
    CHECK_THROWS_AS((void)decompose_blocks(sum, Theory::C), std::invalid_argument);
}

TEST_CASE("blocks tile and enter at even parity")
{
    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (int n = 0; n <= 6; ++n)
            for (const auto& pair : enumerate_rigid_pairs(t, n))
                for (auto tb : {TieBreak::PrimeFirst, TieBreak::DprimeFirst}) {
                    auto tp = combine(pair, CombineMode::Interleave, tb);
                    auto blocks = decompose_blocks(tp, t);
                    std::size_t at = 0;
                    for (const auto& b : blocks) {
                        CHECK(b.begin == at);
                        CHECK(b.end > b.begin);
                        CHECK(b.entry_parity == 0);
                        at = b.end;
                        if (t == Theory::C)
                            CHECK(b.kind != BlockKind::I);
                    }
                    CHECK(at == tp.rows.size());
                }
}

TEST_CASE("block_sp examples")
{
    auto ones = tagged({1, 1, 1}, {Pr, Pr, Pr});
    CHECK(block_sp(whole(ones, 0), ones).mu == std::vector<int>{1, 1, 0});

    auto twos = tagged({2, 2}, {Pr, Pr});
    CHECK(block_sp(whole(twos, 0), twos).mu == std::vector<int>{2, 2});

    auto mixed = tagged({3, 2, 2}, {Pr, Pr, Pr});
    CHECK(block_sp(whole(mixed, 0), mixed).mu == std::vector<int>{2, 2, 2});
}

TEST_CASE("block path equals direct path")
{
    auto b = block_fingerprint(OperatorPair(P({2, 2, 1}), P({1, 1}), Theory::B));
    REQUIRE(b.ok());
    CHECK(b.weyl().alpha == P({2, 1}));
    CHECK(b.weyl().beta.empty());

    auto c = block_fingerprint(OperatorPair(P({2, 1, 1}), P({1, 1}), Theory::C));
    REQUIRE(c.ok());
    CHECK(c.weyl().alpha == P({1, 1}));
    CHECK(c.weyl().beta == P({1}));

    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (int n = 0; n <= 6; ++n)
            for (const auto& pair : enumerate_rigid_pairs(t, n))
                for (auto tb : {TieBreak::PrimeFirst, TieBreak::DprimeFirst}) {
                    FingerprintOptions o;
                    o.tie_break = tb;
                    auto direct = fingerprint::fingerprint(pair, o);
                    auto via = block_fingerprint(pair, o);
                    CHECK(direct.trace == via.trace);
                    CHECK(direct.tau == via.tau);
                    CHECK(direct.outcome == via.outcome);
                }

    FingerprintOptions sum;
    sum.combine_mode = CombineMode::Componentwise;
    CHECK_THROWS_AS((void)block_fingerprint(OperatorPair(P({1, 1}), P({}), Theory::C), sum),
                    std::invalid_argument);
}

TEST_CASE("labels print")
{
    CHECK(to_string(OperatorLabel::E11) == "mu_e11");
    CHECK(to_string(OperatorLabel::O2) == "mu_o2");
    CHECK(to_string(OperatorLabel::II) == "mu_II");
    CHECK(to_string(BlockKind::III) == "III");
}
