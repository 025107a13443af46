#include <gtest/gtest.h>

#include "oracles.hpp"
#include "winertia/closed_forms.hpp"
#include "winertia/matrix.hpp"
#include "winertia/testgen.hpp"

using namespace winertia;

namespace {

using Signs = std::pair<std::size_t, std::size_t>;

WeightedGraph edgelist(std::string_view text) { return parse_graph(text, GraphFormat::EdgeList); }

std::vector<Rational> weights(std::initializer_list<int> w) { return {w.begin(), w.end()}; }

WeightedGraph cycle_graph(const std::vector<Rational>& w) {
    WeightedGraph g;
    for (std::size_t i = 0; i < w.size(); ++i) {
        g.add_edge(std::to_string(i), std::to_string((i + 1) % w.size()), w[i]);
    }
    return g;
}

BaseDescriptor unit_base(BaseKind k, std::size_t p, std::size_t l, std::size_t q) {
    return make_base(k, p, l, q, [] { return Rational(1); });
}

Signs signs(const Inertia& in) { return {in.pos, in.neg}; }

}  // namespace

TEST(Forest, Examples) {
    EXPECT_EQ(forest_inertia(edgelist("1 2 1\n2 3 1\n3 4 1\n4 5 1")), (Inertia{2, 2, 1}));
    EXPECT_EQ(forest_inertia(edgelist("vertices: a b c d")), (Inertia{0, 0, 4}));
    EXPECT_THROW(forest_inertia(edgelist("1 2 1\n2 3 1\n3 1 1")), GraphError);
}

TEST(Forest, MatchesOracle) {
    Rng rng(40);
    for (int t = 0; t < 100; ++t) {
        const auto g = generate({GraphKind::Forest, static_cast<std::size_t>(1 + t % 15), rng(),
                                 WeightRegime::RandomRational, ""});
        EXPECT_EQ(forest_inertia(g), inertia_oracle(g));
    }
}

TEST(Cycle, Examples) {
    EXPECT_EQ(cycle_inertia(weights({1, 1, 1, 1})), (Inertia{1, 1, 2}));
    EXPECT_EQ(cycle_inertia(weights({2, 1, 1, 1})), (Inertia{2, 2, 0}));
    EXPECT_EQ(cycle_inertia(weights({3, 1, 4, 1, 5, 9})), (Inertia{3, 3, 0}));
    EXPECT_EQ(cycle_inertia(weights({3, 1, 4, 1, 5, 9, 2})), (Inertia{3, 4, 0}));
    EXPECT_EQ(cycle_inertia(weights({1, 1, 1})), (Inertia{1, 2, 0}));
    EXPECT_EQ(cycle_inertia(weights({1, 2, 3, 4, 5})), (Inertia{3, 2, 0}));
    EXPECT_THROW(cycle_inertia(weights({1, 1})), std::invalid_argument);
}

TEST(Cycle, MatchesOracleForEveryLength) {
    Rng rng(41);
    for (std::size_t n = 3; n <= 24; ++n) {
        for (int s = 0; s < 5; ++s) {
            std::vector<Rational> w;
            for (std::size_t i = 0; i < n; ++i) w.push_back(random_weight(rng));
            if (n % 4 == 0 && s % 2 == 0) ASSERT_TRUE(force_cycle_relation(w, Relation::EQ, rng));
            EXPECT_EQ(cycle_inertia(w), inertia_oracle(cycle_graph(w))) << "n=" << n;
        }
    }
}

TEST(Cycle, WeightInvariantOffZeroResidue) {
    Rng rng(42);
    for (std::size_t n = 3; n <= 15; ++n) {
        if (n % 4 == 0) continue;
        const auto base = cycle_inertia(std::vector<Rational>(n, Rational(1)));
        for (int s = 0; s < 5; ++s) {
            std::vector<Rational> w;
            for (std::size_t i = 0; i < n; ++i) w.push_back(random_weight(rng));
            EXPECT_EQ(cycle_inertia(w), base);
        }
    }
}

TEST(Cycle, ConditionRotationInvariant) {
    Rng rng(43);
    std::vector<Rational> w;
    for (int i = 0; i < 8; ++i) w.push_back(random_weight(rng));
    ASSERT_TRUE(force_cycle_relation(w, Relation::EQ, rng));
    std::rotate(w.begin(), w.begin() + 1, w.end());
    EXPECT_EQ(cycle_condition(w).relation(), Relation::EQ);
}

TEST(Infinity, Examples) {
    Rng rng(44);
    auto rnd = [&rng] { return random_weight(rng); };
    EXPECT_EQ(signs(infinity_base_inertia(make_base(BaseKind::Infinity, 3, 1, 3, rnd))),
              Signs(2, 3));
    EXPECT_EQ(signs(infinity_base_inertia(make_base(BaseKind::Infinity, 5, 1, 5, rnd))),
              Signs(5, 4));
    EXPECT_EQ(signs(infinity_base_inertia(unit_base(BaseKind::Infinity, 7, 1, 3))),
              Signs(4, 5));
    EXPECT_EQ(signs(inertia_oracle(unit_base(BaseKind::Infinity, 7, 1, 3).to_graph())),
              Signs(4, 5));

    // 4 a1 b1 a3 b3 / (a2 b2) = c1^2
    auto d = unit_base(BaseKind::Infinity, 3, 2, 3);
    d.c[0] = 2;
    const auto cond = table1_condition(d);
    ASSERT_TRUE(cond.has_value());
    EXPECT_EQ(cond->relation(), Relation::EQ);
    EXPECT_EQ(signs(infinity_base_inertia(d)), Signs(2, 3));
    EXPECT_EQ(signs(inertia_oracle(d.to_graph())), Signs(2, 3));
}

TEST(Infinity, RejectsOtherKinds) {
    EXPECT_THROW(infinity_base_inertia(unit_base(BaseKind::Theta, 2, 3, 3)), std::invalid_argument);
    EXPECT_THROW(theta_base_inertia(unit_base(BaseKind::Infinity, 3, 1, 3)), std::invalid_argument);
    auto bad = unit_base(BaseKind::Infinity, 3, 2, 3);
    bad.c.clear();
    EXPECT_THROW(evaluate_base(bad), std::invalid_argument);
}

TEST(Theta, Examples) {
    Rng rng(45);
    auto rnd = [&rng] { return random_weight(rng); };
    EXPECT_EQ(signs(theta_base_inertia(make_base(BaseKind::Theta, 2, 3, 5, rnd))),
              Signs(3, 3));

    // θ(2,4,3): the 4-path is c here; a1 b2 > b1 b3 reads a[0] c[1] > c[0] c[2]
    auto d243 = unit_base(BaseKind::Theta, 2, 3, 4);
    d243.a[0] = 2;
    EXPECT_EQ(signs(theta_base_inertia(d243)), Signs(2, 3));
    EXPECT_EQ(signs(inertia_oracle(d243.to_graph())), Signs(2, 3));

    const auto d334 = unit_base(BaseKind::Theta, 3, 3, 4);
    EXPECT_EQ(signs(theta_base_inertia(d334)), Signs(3, 2));
    EXPECT_EQ(evaluate_base(d334).rule, "theta(3,3,q)");

    const auto d443 = unit_base(BaseKind::Theta, 3, 4, 4);
    EXPECT_EQ(signs(theta_base_inertia(d443)), Signs(4, 3));
    EXPECT_EQ(signs(inertia_oracle(d443.to_graph())), Signs(4, 3));
}

TEST(Table1, RowsAndBranches) {
    const auto& rows = table1_rows();
    EXPECT_EQ(rows.size(), 15u);
    std::size_t branches = 0;
    for (const auto& r : rows) branches += r.conditional ? 3 : 1;
    EXPECT_EQ(branches, 29u);
}

TEST(Table1, EveryBranchAgreesWithOracle) {
    Rng rng(46);
    for (const auto& row : table1_rows()) {
        for (auto rel : {Relation::LT, Relation::EQ, Relation::GT}) {
            if (!row.conditional && rel != Relation::EQ) continue;
            for (int s = 0; s < 5; ++s) {
                const auto d = table1_witness(row, rel, rng);
                if (row.conditional) EXPECT_EQ(table1_condition(d)->relation(), rel);
                const auto expect = row.values[static_cast<std::size_t>(rel)];
                const auto closed = infinity_base_inertia(d);
                const auto oracle = inertia_oracle(d.to_graph());
                EXPECT_EQ(closed.pos, expect[0]) << d.name();
                EXPECT_EQ(closed.neg, expect[1]) << d.name();
                EXPECT_EQ(oracle.pos, expect[0]) << d.name();
                EXPECT_EQ(oracle.neg, expect[1]) << d.name();
            }
        }
    }
}

TEST(Representative, Ranges) {
    for (const auto& s : bicyclic_shapes(22)) {
        const auto rep = reduce_representative(unit_base(s.kind, s.p, s.l, s.q)).base;
        if (s.kind == BaseKind::Infinity) {
            EXPECT_GE(rep.p, 3u);
            EXPECT_LE(rep.p, 6u);
            EXPECT_LE(rep.q, 6u);
            EXPECT_LE(rep.p, rep.q);
            EXPECT_LE(rep.l, 5u);
        } else {
            std::size_t twos = 0;
            for (auto len : {rep.p, rep.l, rep.q}) {
                EXPECT_GE(len, 2u);
                EXPECT_LE(len, 6u);
                twos += len == 2;
                if (len == 6) EXPECT_TRUE(rep.p == 2 || rep.l == 2 || rep.q == 2);
            }
            EXPECT_LE(twos, 1u);
        }
        EXPECT_NO_THROW(rep.validate());
        EXPECT_NO_THROW(rep.to_graph());
    }
}

TEST(Representative, EveryShapeMatchesOracleWithoutFallback) {
    Rng rng(47);
    for (const auto& s : bicyclic_shapes(14)) {
        for (int regime = 0; regime < 4; ++regime) {
            auto d = regime == 0 ? unit_base(s.kind, s.p, s.l, s.q)
                                 : make_base(s.kind, s.p, s.l, s.q,
                                             [&rng] { return random_weight(rng); });
            if (regime == 2) force_relation(d, Relation::EQ, rng);
            const auto ev = evaluate_base(d, true);
            EXPECT_FALSE(ev.oracle_fallback) << d.name();
            EXPECT_EQ(ev.inertia, inertia_oracle(d.to_graph())) << d.name() << " " << ev.rule;
        }
    }
}

TEST(Representative, ModFourExtensionAddsTwoPerFold) {
    Rng rng(48);
    auto rnd = [&rng] { return random_weight(rng); };
    std::size_t folded = 0;
    for (const auto& s : bicyclic_shapes(9)) {
        for (int ext = 0; ext < 3; ++ext) {
            auto p = s.p, l = s.l, q = s.q;
            (ext == 0 ? p : ext == 1 ? l : q) += 4;
            const auto big = make_base(s.kind, p, l, q, rnd);
            const auto rep = reduce_representative(big);
            folded += rep.folds > 0;
            const auto in_big = inertia_oracle(big.to_graph());
            const auto in_rep = inertia_oracle(rep.base.to_graph());
            EXPECT_EQ(in_big.pos, in_rep.pos + 2 * rep.folds) << big.name();
            EXPECT_EQ(in_big.neg, in_rep.neg + 2 * rep.folds) << big.name();
            EXPECT_EQ(rep.trace.offset(), (SignOffset{2 * rep.folds, 2 * rep.folds}));
        }
    }
    EXPECT_GT(folded, 100u);
}

TEST(Representative, FoldedWeightsFollowContraction) {
    auto d = make_base(BaseKind::Infinity, 7, 1, 3, [] { return Rational(1); });
    d.a = weights({2, 3, 5, 7, 11, 13, 17});
    const auto rep = reduce_representative(d);
    ASSERT_EQ(rep.base.p, 3u);
    EXPECT_EQ(rep.base.a[0], Rational(2 * 5 * 11, 3 * 7));
    EXPECT_EQ(rep.base.a[1], 13);
    EXPECT_EQ(rep.base.a[2], 17);
}

TEST(Conditions, GoverningConditionIds) {
    EXPECT_FALSE(governing_condition(unit_base(BaseKind::Infinity, 3, 1, 3)).has_value());
    EXPECT_EQ(governing_condition(unit_base(BaseKind::Infinity, 3, 2, 3))->id, "table1(3,2,3)");
    EXPECT_EQ(governing_condition(unit_base(BaseKind::Infinity, 4, 1, 5))->id, "c4-join");
    EXPECT_EQ(governing_condition(unit_base(BaseKind::Theta, 3, 3, 5))->id, "theta(3,3,q)");
    EXPECT_EQ(governing_condition(unit_base(BaseKind::Theta, 2, 5, 5))->id, "theta(5,5,q)");
    EXPECT_EQ(branch_key(unit_base(BaseKind::Theta, 2, 4, 4)), "theta(4,4,q)");
    EXPECT_EQ(branch_key(unit_base(BaseKind::Theta, 2, 4, 6)), "theta(2,6,q)");
    EXPECT_EQ(branch_key(unit_base(BaseKind::Theta, 2, 3, 5)), "");
}
