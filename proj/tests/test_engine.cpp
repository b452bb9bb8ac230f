#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingerprint/engine.hpp"
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

TaggedPartition tagged(std::vector<int> values, std::vector<Origin> origins)
{
    TaggedPartition tp;
    for (std::size_t i = 0; i < values.size(); ++i)
        tp.rows.push_back({values[i], origins[i],
                           origins[i] == Origin::Prime ? std::optional<int>(values[i]) : std::nullopt});
    return tp;
}

constexpr Origin Pr = Origin::Prime;
constexpr Origin Dp = Origin::Dprime;

}  // namespace

TEST_CASE("prefix signs")
{
    std::vector<int> a{3, 2, 2}, b{2, 2, 1, 1};
    CHECK(prefix_signs(a) == std::vector<int>{-1, -1, -1});
    CHECK(prefix_signs(b) == std::vector<int>{1, 1, -1, 1});
    CHECK(prefix_signs(std::vector<int>{}).empty());
}

TEST_CASE("sp_map examples")
{
    auto t1 = sp_map(std::vector<int>{2, 1, 1});
    CHECK(t1.mu == std::vector<int>{2, 1, 1});

    auto t2 = sp_map(std::vector<int>{3, 2, 2, 1, 1, 1, 1});
    CHECK(t2.mu == std::vector<int>{2, 2, 2, 2, 1, 1, 0});
    CHECK(t2.changed(0));
    CHECK(t2.changed(3));
    CHECK(t2.changed(6));
    CHECK_FALSE(t2.changed(1));
    CHECK(t2.mu_partition() == P({2, 2, 2, 2, 1, 1}));

    auto t3 = sp_map(std::vector<int>{3, 3, 3, 2, 2, 1});
    CHECK(t3.mu == std::vector<int>{3, 3, 2, 2, 2, 2});
    CHECK(t3.changed(2));
    CHECK(t3.changed(5));

    auto t4 = sp_map(std::vector<int>{1});
    CHECK(t4.mu == std::vector<int>{0});
    CHECK(t4.mu_partition().empty());
}

TEST_CASE("sp_map agrees with the literal formula")
{
    for (int n = 0; n <= 18; ++n)
        for (const auto& p : oracle::partitions(n)) {
            auto lib = sp_map(p);
            auto ref = oracle::sp(p);
            CHECK(lib.mu == ref.mu);
            CHECK(lib.sign == ref.p);
            int d = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                d += ref.mu[i] - ref.lambda[i];
                CHECK(lib.partial_sum_delta[i] == d);
            }
        }
}

TEST_CASE("conditions parse")
{
    CHECK(parse_conditions("i,iii") == ConditionSet{true, false, true});
    CHECK(parse_conditions("") == ConditionSet{false, false, false});
    CHECK(format_conditions(ConditionSet{}) == "i,ii,iii");
    CHECK_THROWS_AS((void)parse_conditions("i,iv"), std::invalid_argument);
}

TEST_CASE("tau_table examples")
{
    auto tr = sp_map(std::vector<int>{3, 2, 2, 1, 1, 1, 1});
    auto tp = tagged({3, 2, 2, 1, 1, 1, 1}, {Pr, Pr, Pr, Pr, Pr, Pr, Pr});
    FingerprintOptions only_i;
    only_i.conditions = {true, false, false};
    auto tau = tau_table(tr, tp, Theory::B, only_i);
    CHECK(tau.at(2).tau == -1);
    CHECK(tau.at(2).witness == Condition::I);
    CHECK(tau.at(2).witness_index == std::size_t{0});

    auto tp2 = tagged({2, 1, 1, 1, 1}, {Pr, Pr, Pr, Dp, Dp});
    auto tau2 = tau_table(sp_map(tp2.values()), tp2, Theory::C, {});
    CHECK(tau2.at(2).tau == -1);
    CHECK(tau2.at(2).witness == Condition::III);
    CHECK(tau2.at(2).witness_index == std::size_t{0});

    auto tp3 = tagged({2, 2, 1, 1, 1}, {Pr, Pr, Pr, Dp, Dp});
    auto tau3 = tau_table(sp_map(tp3.values()), tp3, Theory::B, {});
    CHECK(tau3.at(2).tau == 1);
    CHECK_FALSE(tau3.at(2).witness);
}

TEST_CASE("extraction examples")
{
    SpTrace a;
    a.mu = {2, 2, 2, 2, 1, 1};
    auto r = extract_weyl_pair(a, {{2, TauEntry{-1, Condition::I, 0}}}, 5);
    REQUIRE(std::holds_alternative<WeylPair>(r));
    CHECK(std::get<WeylPair>(r).alpha == P({1}));
    CHECK(std::get<WeylPair>(r).beta == P({1, 1, 1, 1}));
    CHECK(std::get<WeylPair>(r).rank_consistent());

    SpTrace b;
    b.mu = {2, 2, 2, 2};
    auto r2 = extract_weyl_pair(b, {{2, TauEntry{}}}, 4);
    REQUIRE(std::holds_alternative<WeylPair>(r2));
    CHECK(std::get<WeylPair>(r2).alpha == P({2, 2}));
    CHECK(std::get<WeylPair>(r2).beta.empty());

    SpTrace c;
    c.mu = {2, 1, 1};
    auto r3 = extract_weyl_pair(c, {{2, TauEntry{}}}, 2);
    REQUIRE(std::holds_alternative<ExtractionDiagnostic>(r3));
    const auto& d = std::get<ExtractionDiagnostic>(r3);
    CHECK(d.value == 2);
    CHECK(d.multiplicity == 1);
    CHECK(d.tau == 1);
    CHECK(d.message().rfind("unpaired even value 2", 0) == 0);
}

TEST_CASE("fingerprint examples")
{
    auto f1 = fingerprint::fingerprint(OperatorPair(P({1, 1, 1}), P({1, 1}), Theory::B));
    REQUIRE(f1.ok());
    CHECK(f1.weyl().alpha == P({1, 1}));
    CHECK(f1.weyl().beta.empty());

    auto f2 = fingerprint::fingerprint(OperatorPair(P({2, 2, 1}), P({1, 1}), Theory::B));
    REQUIRE(f2.ok());
    CHECK(f2.weyl().alpha == P({2, 1}));
    CHECK(f2.weyl().beta.empty());
    CHECK(f2.tau.at(2).tau == 1);

    auto f3 = fingerprint::fingerprint(OperatorPair(P({2, 1, 1}), P({1, 1}), Theory::C));
    REQUIRE(f3.ok());
    CHECK(f3.weyl().alpha == P({1, 1}));
    CHECK(f3.weyl().beta == P({1}));
    CHECK(f3.tau.at(2).witness == Condition::III);
    CHECK(f3.options.iii_variant == IiiVariant::Sp);

    FingerprintOptions vac;
    vac.iii_variant = IiiVariant::Vacuous;
    auto f4 = fingerprint::fingerprint(OperatorPair(P({}), P({2, 2, 2, 2, 1, 1}), Theory::C), vac);
    REQUIRE(f4.ok());
    CHECK(f4.weyl().alpha == P({2, 2, 1}));
    CHECK(f4.weyl().beta.empty());

    auto f5 = fingerprint::fingerprint(OperatorPair(P({2, 1, 1}), P({1, 1}), Theory::C), vac);
    REQUIRE_FALSE(f5.ok());
    CHECK(f5.diagnostic().value == 2);
}

TEST_CASE("fingerprint agrees with the oracle on every convention")
{
    for (Theory t : {Theory::B, Theory::C, Theory::D})
        for (int n = 0; n <= 5; ++n)
            for (const auto& pair : enumerate_rigid_pairs(t, n))
                for (auto mode : {CombineMode::Interleave, CombineMode::Componentwise})
                    for (auto tb : {TieBreak::PrimeFirst, TieBreak::DprimeFirst})
                        for (auto v : {IiiVariant::So, IiiVariant::Sp, IiiVariant::Vacuous})
                            for (int mask = 0; mask < 8; ++mask) {
                                FingerprintOptions o;
                                o.combine_mode = mode;
                                o.tie_break = tb;
                                o.iii_variant = v;
                                o.conditions = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
                                oracle::Options ro;
                                ro.interleave = mode == CombineMode::Interleave;
                                ro.prime_first = tb == TieBreak::PrimeFirst;
                                ro.variant = v == IiiVariant::So ? 'o' : v == IiiVariant::Sp ? 'p' : 'v';
                                ro.ci = o.conditions.i;
                                ro.cii = o.conditions.ii;
                                ro.ciii = o.conditions.iii;
                                auto lib = fingerprint::fingerprint(pair, o);
                                auto ref = oracle::fingerprint(pair.lambda_prime().vector(),
                                                               pair.lambda_dprime().vector(),
                                                               letter(t), ro);
                                CAPTURE(oracle::show(pair.lambda_prime().vector()));
                                CAPTURE(oracle::show(pair.lambda_dprime().vector()));
                                CHECK(lib.trace.mu_partition().vector() == ref.mu);
                                REQUIRE(lib.ok() == ref.ok);
                                if (ref.ok) {
                                    CHECK(lib.weyl().alpha.vector() == ref.alpha);
                                    CHECK(lib.weyl().beta.vector() == ref.beta);
                                } else {
                                    CHECK(lib.diagnostic().value == ref.bad_value);
                                }
                            }
}

TEST_CASE("non-rigid input is accepted and flagged")
{
    auto f = fingerprint::fingerprint(OperatorPair(P({2, 2}), P({}), Theory::D));
    CHECK_FALSE(f.prime_rigid());
    CHECK(f.dprime_rigid());
}
