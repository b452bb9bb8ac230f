#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingerprint/partition.hpp"
#include "oracle.hpp"

using namespace fingerprint;

namespace {

Partition P(std::vector<int> v)
{
    return Partition(std::move(v));
}

char letter(Theory t)
{
    return t == Theory::B ? 'B' : t == Theory::C ? 'C' : 'D';
}

}  // namespace

TEST_CASE("parse exponent and list forms")
{
    CHECK(parse_partition("2^4 1^2").vector() == std::vector<int>{2, 2, 2, 2, 1, 1});
    CHECK(parse_partition("3,2,2,1").vector() == std::vector<int>{3, 2, 2, 1});
    CHECK(parse_partition("(3, 2, 2, 1)").vector() == std::vector<int>{3, 2, 2, 1});
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("()").empty());
    CHECK(parse_partition("∅").empty());
}

TEST_CASE("parse errors name the token")
{
    CHECK_THROWS_AS((void)parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS((void)parse_partition("3,0"), ParseError);
    CHECK_THROWS_AS((void)parse_partition("2^-1"), ParseError);
    try {
        (void)parse_partition("3 x 1");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    }
}

TEST_CASE("partition constructor validates")
{
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2}).vector() == std::vector<int>{3, 2, 1});
}

TEST_CASE("format round trip")
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(parse_partition(format_exponent(p)) == p);
            CHECK(parse_partition(format_list(p)) == p);
        }
    CHECK(format_exponent(P({2, 2, 1})) == "2^2 1");
}

TEST_CASE("theory membership")
{
    CHECK(is_theory_member(P({3, 2, 2}), Theory::B));
    CHECK(is_theory_member(P({2, 1, 1}), Theory::C));
    CHECK_FALSE(is_theory_member(P({3, 2, 2}), Theory::D));
}

TEST_CASE("rigidity examples")
{
    CHECK(is_rigid(P({2, 2, 1, 1, 1}), Theory::B));
    CHECK_FALSE(is_rigid(P({2, 2}), Theory::D));
    CHECK(is_rigid(P({2, 1, 1}), Theory::C));
    CHECK(is_rigid(P({1, 1, 1, 1, 1}), Theory::B));
    CHECK(is_rigid(P({1, 1}), Theory::D));
    CHECK_FALSE(is_rigid(P({2}), Theory::D));
}

TEST_CASE("transpose")
{
    CHECK(transpose(P({2, 2, 1, 1, 1})) == P({5, 2}));
    CHECK(transpose(P({3, 2, 2, 1})) == P({4, 3, 1}));
    CHECK(transpose(P({})).empty());
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p).vector() == oracle::transpose(p.vector()));
        }
}

TEST_CASE("partitions_of agrees with the oracle walk")
{
    for (int n = 0; n <= 16; ++n) {
        auto lib = partitions_of(n);
        auto ref = oracle::partitions(n);
        REQUIRE(lib.size() == ref.size());
        for (std::size_t i = 0; i < lib.size(); ++i)
            CHECK(lib[i].vector() == ref[i]);
    }
}

TEST_CASE("enumerate_rigid examples")
{
    CHECK(enumerate_rigid(Theory::B, 2) == std::vector<Partition>{P({2, 2, 1}), P({1, 1, 1, 1, 1})});
    CHECK(enumerate_rigid(Theory::C, 2) == std::vector<Partition>{P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(enumerate_rigid(Theory::D, 1) == std::vector<Partition>{P({1, 1})});
    CHECK(enumerate_rigid(Theory::D, 0) == std::vector<Partition>{P({})});
}

TEST_CASE("enumerate_rigid agrees with brute force")
{
    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (int n = 0; n <= 10; ++n) {
            auto lib = enumerate_rigid(t, n);
            auto ref = oracle::rigid_of_rank(letter(t), n);
            REQUIRE(lib.size() == ref.size());
            for (std::size_t i = 0; i < lib.size(); ++i) {
                CHECK(lib[i].vector() == ref[i]);
                CHECK(rank_of(lib[i], t) == n);
            }
        }
}

TEST_CASE("rigid pairs")
{
    auto b1 = enumerate_rigid_pairs(Theory::B, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].lambda_prime() == P({1, 1, 1}));
    CHECK(b1[0].lambda_dprime().empty());
    CHECK(b1[1].lambda_prime() == P({1}));
    CHECK(b1[1].lambda_dprime() == P({1, 1}));

    auto c1 = enumerate_rigid_pairs(Theory::C, 1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].lambda_prime() == P({1, 1}));
    CHECK(c1[1].lambda_dprime() == P({1, 1}));

    auto d0 = enumerate_rigid_pairs(Theory::D, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].lambda_prime().empty());
    CHECK(d0[0].lambda_dprime().empty());

    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (int n = 0; n <= 6; ++n) {
            auto lib = enumerate_rigid_pairs(t, n);
            auto ref = oracle::rigid_pairs(letter(t), n);
            REQUIRE(lib.size() == ref.size());
            for (std::size_t i = 0; i < lib.size(); ++i) {
                CHECK(lib[i].lambda_prime().vector() == ref[i].prime);
                CHECK(lib[i].lambda_dprime().vector() == ref[i].dprime);
                CHECK(lib[i].rank() == n);
                CHECK(lib[i].rigid());
            }
        }
}

TEST_CASE("operator pair validation")
{
    CHECK_THROWS_AS(OperatorPair(P({2}), P({}), Theory::B), std::invalid_argument);
    CHECK_THROWS_AS(OperatorPair(P({1}), P({1}), Theory::B), std::invalid_argument);
    CHECK_NOTHROW(OperatorPair(P({}), P({3, 2, 2}), Theory::B));
    CHECK_THROWS_AS(OperatorPair(P({}), P({}), Theory::B), std::invalid_argument);
    CHECK_THROWS_AS(OperatorPair(P({1}), P({}), Theory::C), std::invalid_argument);
    CHECK(OperatorPair(P({2, 2, 1}), P({1, 1}), Theory::B).rank() == 3);
}

TEST_CASE("combine")
{
    OperatorPair b(P({2, 2, 1}), P({1, 1}), Theory::B);
    auto tp = combine(b, CombineMode::Interleave, TieBreak::PrimeFirst);
    CHECK(tp.values() == std::vector<int>{2, 2, 1, 1, 1});
    std::vector<Origin> origins;
    for (const auto& r : tp.rows)
        origins.push_back(r.origin);
    CHECK(origins == std::vector<Origin>{Origin::Prime, Origin::Prime, Origin::Prime, Origin::Dprime,
                                         Origin::Dprime});
    auto swapped = combine(b, CombineMode::Interleave, TieBreak::DprimeFirst);
    CHECK(swapped.rows[2].origin == Origin::Dprime);
    CHECK(swapped.rows[4].origin == Origin::Prime);

    OperatorPair c(P({2, 1, 1}), P({1, 1}), Theory::C);
    auto sum = combine(c, CombineMode::Componentwise);
    CHECK(sum.values() == std::vector<int>{3, 2, 1});
    REQUIRE(sum.rows[0].prime_part);
    CHECK(*sum.rows[0].prime_part % 2 == 0);
    CHECK(*sum.rows[1].prime_part % 2 == 1);
    CHECK(*sum.rows[2].prime_part % 2 == 1);

    OperatorPair u(P({3, 2, 2}), P({}), Theory::B);
    for (auto mode : {CombineMode::Interleave, CombineMode::Componentwise}) {
        auto t = combine(u, mode);
        CHECK(t.values() == std::vector<int>{3, 2, 2});
    }
    for (const auto& r : combine(u, CombineMode::Interleave).rows)
        CHECK(r.origin == Origin::Prime);
}

TEST_CASE("combine preserves boxes")
{
    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (const auto& pair : enumerate_rigid_pairs(t, 5))
            for (auto mode : {CombineMode::Interleave, CombineMode::Componentwise}) {
                auto tp = combine(pair, mode);
                CHECK(tp.total() == pair.lambda_prime().total() + pair.lambda_dprime().total());
                auto v = tp.values();
                CHECK(std::is_sorted(v.rbegin(), v.rend()));
            }
}
