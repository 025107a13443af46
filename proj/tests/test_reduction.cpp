#include <gtest/gtest.h>

#include "oracles.hpp"
#include "winertia/closed_forms.hpp"
#include "winertia/matrix.hpp"
#include "winertia/reduction.hpp"
#include "winertia/structure.hpp"
#include "winertia/testgen.hpp"

using namespace winertia;

namespace {

WeightedGraph edgelist(std::string_view text) { return parse_graph(text, GraphFormat::EdgeList); }

WeightedGraph unit_cycle(std::size_t n) {
    WeightedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_edge(std::to_string(i), std::to_string((i + 1) % n), 1);
    return g;
}

Inertia plus(const Inertia& in, const SignOffset& off, std::size_t n) {
    return Inertia::from_signs(in.pos + off.pos, in.neg + off.neg, n);
}

}  // namespace

TEST(PendantPair, Examples) {
    auto r = delete_pendant_pair(edgelist("1 2 7"), 0);
    EXPECT_TRUE(r.graph.empty());
    EXPECT_EQ(r.offset, (SignOffset{1, 1}));

    const auto p4 = edgelist("1 2 1\n2 3 1\n3 4 1");
    r = delete_pendant_pair(p4, 0);
    EXPECT_EQ(r.graph.order(), 2u);
    EXPECT_EQ(plus(inertia_oracle(r.graph), r.offset, 4), (Inertia{2, 2, 0}));

    const auto star = edgelist("c 1 1\nc 2 1\nc 3 1");
    r = delete_pendant_pair(star, star.index_of("1"));
    EXPECT_EQ(r.graph.size(), 0u);
    EXPECT_EQ(plus(inertia_oracle(r.graph), r.offset, 4), (Inertia{1, 1, 2}));
    EXPECT_EQ(r.step.removed, (std::vector<std::string>{"1", "c"}));

    EXPECT_THROW(delete_pendant_pair(star, star.index_of("c")), GraphError);
}

TEST(PathContract, WeightFormula) {
    const std::array<Rational, 5> w{1, 2, 3, 4, 5};
    EXPECT_EQ(contracted_weight(w), Rational(15, 8));
    const std::array<Rational, 5> ones{1, 1, 1, 1, 1};
    EXPECT_EQ(contracted_weight(ones), 1);
}

TEST(PathContract, Examples) {
    const auto path = edgelist("x0 x1 1\nx1 x2 2\nx2 x3 3\nx3 x4 4\nx4 x5 5");
    const std::array<std::size_t, 6> run{0, 1, 2, 3, 4, 5};
    const auto r = contract_degree2_path(path, run);
    EXPECT_EQ(r.offset, (SignOffset{2, 2}));
    ASSERT_EQ(r.graph.order(), 2u);
    EXPECT_EQ(r.graph.weight(0, 1), Rational(15, 8));
    EXPECT_EQ(r.step.added.front(), (AddedEdge{"x0", "x5", Rational(15, 8)}));

    const auto c8 = unit_cycle(8);
    const std::array<std::size_t, 6> c8run{0, 1, 2, 3, 4, 5};
    const auto r8 = contract_degree2_path(c8, c8run);
    EXPECT_EQ(r8.graph.order(), 4u);
    EXPECT_EQ(plus(inertia_oracle(r8.graph), r8.offset, 8), (Inertia{3, 3, 2}));
    EXPECT_EQ(inertia_oracle(c8), (Inertia{3, 3, 2}));
}

TEST(PathContract, Refusals) {
    const auto c6 = unit_cycle(6);
    const std::array<std::size_t, 6> c6run{0, 1, 2, 3, 4, 5};
    EXPECT_THROW(contract_degree2_path(c6, c6run), GraphError);  // x0-x5 already adjacent
    const auto c5 = unit_cycle(5);
    const std::array<std::size_t, 6> loop{0, 1, 2, 3, 4, 0};
    EXPECT_THROW(contract_degree2_path(c5, loop), GraphError);
    const auto star = edgelist("c a 1\nc b 1\nc d 1\na e 1\ne f 1\nf g 1");
    const std::array<std::size_t, 6> bad{star.index_of("b"), star.index_of("c"), star.index_of("a"),
                                         star.index_of("e"), star.index_of("f"), star.index_of("g")};
    EXPECT_THROW(contract_degree2_path(star, bad), GraphError);
    const std::array<std::size_t, 5> short_run{0, 1, 2, 3, 4};
    EXPECT_THROW(contract_degree2_path(c6, short_run), GraphError);
}

TEST(ReduceToCore, PerfectMatchingTreeVanishes) {
    const auto t = edgelist("1 2 1\n2 3 5\n3 4 2\n3 5 1\n5 6 3");
    const auto [core, trace] = reduce_to_core(t);
    EXPECT_TRUE(core.empty());
    EXPECT_EQ(trace.offset(), (SignOffset{3, 3}));
}

TEST(ReduceToCore, C12) {
    const auto [core, trace] = reduce_to_core(unit_cycle(12));
    EXPECT_EQ(core.order(), 4u);
    for (const auto& e : core.edges()) EXPECT_EQ(e.weight, 1);
    EXPECT_EQ(trace.offset(), (SignOffset{4, 4}));
    EXPECT_EQ(plus(inertia_oracle(core), trace.offset(), 12), inertia_oracle(unit_cycle(12)));
}

TEST(ReduceToCore, Theta333IsAFixpoint) {
    const auto th = edgelist("u a 1\na v 1\nu b 1\nb v 1\nu c 1\nc v 1");
    const auto [core, trace] = reduce_to_core(th);
    EXPECT_EQ(core, th);
    EXPECT_TRUE(trace.steps.empty());
}

TEST(ReduceToCore, SerializedTrace) {
    const auto [core, trace] = reduce_to_core(edgelist("1 2 1\n2 3 1"));
    EXPECT_EQ(serialize_trace(trace), "PendantPair removed=[1,2] added=[] offset=(+1,+1)\n");
    const std::array<std::size_t, 6> run{0, 1, 2, 3, 4, 5};
    ReductionTrace t;
    t.steps.push_back(contract_degree2_path(edgelist("x0 x1 1\nx1 x2 2\nx2 x3 3\nx3 x4 4\nx4 x5 5"),
                                            run)
                          .step);
    EXPECT_EQ(serialize_trace(t),
              "PathContract removed=[x1,x2,x3,x4] added=[(x0,x5,15/8)] offset=(+2,+2)\n");
}

TEST(ReduceToCore, EveryStepMatchesTheOracle) {
    Rng rng(30);
    const GraphKind kinds[] = {GraphKind::Tree, GraphKind::Forest, GraphKind::Unicyclic,
                               GraphKind::Bicyclic};
    for (int t = 0; t < 200; ++t) {
        WeightedGraph cur = generate({kinds[t % 4], static_cast<std::size_t>(4 + t % 15), rng(),
                                      t % 3 ? WeightRegime::RandomRational : WeightRegime::UnitWeights,
                                      ""});
        const auto total = inertia_oracle(cur);
        const auto [core, trace] = reduce_to_core(cur);
        EXPECT_EQ(plus(inertia_oracle(core), trace.offset(), cur.order()), total);
        for (const auto& s : trace.steps) {
            const auto before = inertia_oracle(cur);
            WeightedGraph next;
            if (s.rule == ReductionRule::PendantPair) {
                next = delete_pendant_pair(cur, cur.index_of(s.removed[0])).graph;
            } else {
                ASSERT_EQ(s.rule, ReductionRule::PathContract);
                std::array<std::size_t, 6> run{cur.index_of(s.added[0].u), 0, 0, 0, 0,
                                               cur.index_of(s.added[0].v)};
                for (int i = 0; i < 4; ++i) run[i + 1] = cur.index_of(s.removed[i]);
                const auto r = contract_degree2_path(cur, run);
                next = r.graph;
                std::array<Rational, 5> w;
                for (int i = 0; i < 5; ++i) w[i] = cur.weight(run[i], run[i + 1]);
                EXPECT_EQ(s.added[0].weight, w[0] * w[2] * w[4] / (w[1] * w[3]));
            }
            const auto after = inertia_oracle(next);
            EXPECT_EQ(before.pos, after.pos + s.offset.pos);
            EXPECT_EQ(before.neg, after.neg + s.offset.neg);
            cur = next;
        }
        // fixpoint: no pendant vertex and no contractible run remain
        for (std::size_t v = 0; v < core.order(); ++v) EXPECT_NE(core.degree(v), 1u);
    }
}

TEST(ReduceToCore, TreesAnyDeletionOrderGivesMatchingNumber) {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        WeightedGraph g = random_tree(1 + t % 14, rng, [&rng] { return random_weight(rng); });
        const auto q = max_matching_forest(g);
        std::size_t total = 0;
        while (true) {
            std::vector<std::size_t> pendants;
            for (std::size_t v = 0; v < g.order(); ++v) {
                if (g.degree(v) == 1) pendants.push_back(v);
            }
            if (pendants.empty()) break;
            g = delete_pendant_pair(g, pendants[rng() % pendants.size()]).graph;
            ++total;
        }
        EXPECT_EQ(total, q);
    }
}
