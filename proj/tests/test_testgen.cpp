#include <gtest/gtest.h>

#include <map>

#include "winertia/closed_forms.hpp"
#include "winertia/structure.hpp"
#include "winertia/testgen.hpp"

using namespace winertia;

TEST(Generate, SmallCases) {
    const auto k1 = generate({GraphKind::Tree, 1, 9, WeightRegime::RandomRational, ""});
    EXPECT_EQ(k1.order(), 1u);
    EXPECT_EQ(k1.size(), 0u);
    const auto c3 = generate({GraphKind::Unicyclic, 3, 9, WeightRegime::RandomRational, ""});
    EXPECT_EQ(c3.order(), 3u);
    EXPECT_EQ(c3.size(), 3u);
    const auto th = generate({GraphKind::Bicyclic, 4, 9, WeightRegime::UnitWeights, ""});
    EXPECT_EQ(describe_base(th).name(), "theta(2,3,3)");
    for (const auto& e : th.edges()) EXPECT_EQ(e.weight, 1);
}

TEST(Generate, Infeasible) {
    EXPECT_THROW(generate({GraphKind::Tree, 0, 1, WeightRegime::RandomRational, ""}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Unicyclic, 2, 1, WeightRegime::RandomRational, ""}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Bicyclic, 3, 1, WeightRegime::RandomRational, ""}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Bicyclic, 5, 1, WeightRegime::ForceEqualityBranch, "c4-join"}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Bicyclic, 12, 1, WeightRegime::ForceEqualityBranch, "nope"}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Tree, 5, 1, WeightRegime::ForceEqualityBranch, "cycle"}),
                 std::invalid_argument);
    EXPECT_THROW(generate({GraphKind::Unsupported, 5, 1, WeightRegime::RandomRational, ""}),
                 std::invalid_argument);
}

TEST(Generate, DeterministicInSeed) {
    for (auto kind : {GraphKind::Tree, GraphKind::Forest, GraphKind::Unicyclic, GraphKind::Bicyclic}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const GenSpec spec{kind, 12, seed, WeightRegime::RandomRational, ""};
            EXPECT_EQ(generate(spec), generate(spec));
        }
    }
    const GenSpec forced{GraphKind::Bicyclic, 14, 3, WeightRegime::ForceEqualityBranch, "theta(5,5,q)"};
    EXPECT_EQ(generate(forced), generate(forced));
}

TEST(Generate, ClassifiesAsRequested) {
    Rng rng(60);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 4 + t % 13;
        EXPECT_EQ(classify(generate({GraphKind::Tree, n, rng(), WeightRegime::RandomRational, ""})).kind,
                  GraphKind::Tree);
        EXPECT_EQ(classify(generate({GraphKind::Unicyclic, n, rng(), WeightRegime::RandomRational, ""})).kind,
                  GraphKind::Unicyclic);
        EXPECT_EQ(classify(generate({GraphKind::Bicyclic, n, rng(), WeightRegime::RandomRational, ""})).kind,
                  GraphKind::Bicyclic);
        const auto f = generate({GraphKind::Forest, n, rng(), WeightRegime::RandomRational, ""});
        EXPECT_TRUE(is_acyclic(f));
        EXPECT_GE(connected_components(f).size(), 2u);
        EXPECT_EQ(f.order(), n);
    }
}

TEST(Generate, WeightsInRange) {
    Rng rng(61);
    for (int t = 0; t < 1000; ++t) {
        const auto w = random_weight(rng);
        EXPECT_GT(w, 0);
        EXPECT_LE(w, 20);
        EXPECT_GE(w, Rational(1, 10));
    }
}

TEST(Generate, EveryBranchForcedAtLeastTenTimes) {
    std::map<std::string, int> hits;
    for (const auto& b : equality_branches()) {
        const auto kind = b == "cycle" ? GraphKind::Unicyclic : GraphKind::Bicyclic;
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const auto g = generate({kind, 16, seed, WeightRegime::ForceEqualityBranch, b});
            const auto d = describe_base(two_core(g));
            if (b == "cycle") {
                ASSERT_EQ(d.kind, BaseKind::Cycle);
                hits[b] += cycle_condition(d.a).relation() == Relation::EQ;
                continue;
            }
            EXPECT_EQ(branch_key(d), b);
            const auto c = governing_condition(d);
            ASSERT_TRUE(c.has_value());
            hits[b] += c->relation() == Relation::EQ;
        }
    }
    for (const auto& b : equality_branches()) EXPECT_GE(hits[b], 10) << b;
}

TEST(Generate, EveryTableBranchInequalitiesReachable) {
    Rng rng(62);
    for (const auto& row : table1_rows()) {
        if (!row.conditional) continue;
        for (auto rel : {Relation::LT, Relation::GT}) {
            const auto d = table1_witness(row, rel, rng);
            EXPECT_EQ(table1_condition(d)->relation(), rel);
        }
    }
}

TEST(ShuffleLabels, PreservesStructure) {
    Rng rng(63);
    const auto g = generate({GraphKind::Bicyclic, 12, 5, WeightRegime::RandomRational, ""});
    const auto h = shuffle_labels(g, rng);
    EXPECT_EQ(h.order(), g.order());
    EXPECT_EQ(h.size(), g.size());
    EXPECT_EQ(h.label(0), "1");
    EXPECT_EQ(describe_base(two_core(h)).name(), describe_base(two_core(g)).name());
}
