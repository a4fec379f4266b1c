#include <xh/forbid.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xh;

namespace
{
    auto f5() -> Hypergraph { return make_hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}); }

    auto k_l_r(std::size_t l, unsigned r) -> Hypergraph
    {
        return complete_multipartite(r, std::vector<std::size_t>(l, 1));
    }

    void expect_partition_proper(const Hypergraph & h, const VertexPartition & p, std::size_t l)
    {
        EXPECT_NO_THROW(p.validate());
        EXPECT_LE(p.parts.size(), l);
        auto part = p.part_of();
        for (auto e : h.edges())
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j)
                    EXPECT_NE(part[e[i]], part[e[j]]);
    }

    void expect_weak_witness(std::size_t core_order, const Hypergraph & h, const WeakExpansionWitness & w)
    {
        ASSERT_EQ(w.core.size(), core_order);
        ASSERT_EQ(w.edges.size(), core_order * (core_order - 1) / 2);
        std::size_t idx = 0;
        for (std::size_t a = 0; a < core_order; ++a)
            for (std::size_t b = a + 1; b < core_order; ++b, ++idx) {
                const auto & e = w.edges[idx];
                EXPECT_TRUE(h.contains_edge(e));
                std::vector<Vertex> meet;
                for (auto x : e)
                    if (std::find(w.core.begin(), w.core.end(), x) != w.core.end())
                        meet.push_back(x);
                std::vector<Vertex> pair{w.core[a], w.core[b]};
                std::sort(pair.begin(), pair.end());
                EXPECT_EQ(meet, pair);
            }
    }
}

TEST(Forbid, ContainsSubgraphExamples)
{
    auto k3 = Pattern(complete_graph(3));
    EXPECT_FALSE(contains_subgraph(k3, cycle_graph(5)));
    EXPECT_TRUE(contains_subgraph(k3, complete_graph(4)));
    // 123 and 124 put 3 and 4 in one part, so 345 is never rainbow.
    EXPECT_FALSE(contains_subgraph(Pattern(f5()), turan(6, 3, 3)));
    EXPECT_FALSE(oracle::contains(f5(), turan(6, 3, 3)));
    EXPECT_TRUE(contains_subgraph(Pattern(f5()), complete_graph(5, 3)));
    EXPECT_THROW(contains_subgraph(k3, turan(6, 3, 3)), ArityError);

    auto map = find_subgraph(Pattern(f5()), complete_graph(6, 3));
    ASSERT_TRUE(map);
    EXPECT_TRUE(is_homomorphism(f5(), complete_graph(6, 3), *map));
}

TEST(Forbid, IsFreeExamples)
{
    auto triangle = ForbiddenFamily::list({Pattern(complete_graph(3))});
    std::vector<std::size_t> twos(5, 2);
    EXPECT_TRUE(is_free(triangle, blowup(cycle_graph(5), twos).graph));
    EXPECT_FALSE(is_free(triangle, complete_graph(4)));
    EXPECT_THROW(is_free(triangle, turan(6, 3, 3)), ArityError);

    EXPECT_TRUE(is_free(ForbiddenFamily::expansion(complete_graph(4), 3), turan(12, 3, 3)));
    EXPECT_FALSE(is_free(ForbiddenFamily::expansion(complete_graph(3), 3), expansion(complete_graph(3), 3)));

    EXPECT_TRUE(is_free(ForbiddenFamily::weak_expansion(4, 3), complete_graph(4, 3)));

    auto empty = ForbiddenFamily::list({});
    EXPECT_TRUE(is_free(empty, complete_graph(5)));
    EXPECT_TRUE(is_free(empty, complete_graph(5, 3)));
    auto empty3 = ForbiddenFamily::list({}, 3);
    EXPECT_THROW(is_free(empty3, complete_graph(5)), ArityError);
}

TEST(Forbid, Describe)
{
    EXPECT_EQ(ForbiddenFamily::list({Pattern(complete_graph(3))}).describe(), "list(1 patterns)");
    EXPECT_EQ(ForbiddenFamily::weak_expansion(4, 3).describe(), "weakexp(K_4, r=3)");
    EXPECT_TRUE(ForbiddenFamily::weak_expansion(4, 3).blowup_invariant());
    EXPECT_TRUE(ForbiddenFamily::list({Pattern(complete_graph(3))}).blowup_invariant());
    EXPECT_FALSE(ForbiddenFamily::list({Pattern(cycle_graph(5))}).blowup_invariant());
}

TEST(Forbid, ExpansionExamples)
{
    auto k3 = complete_graph(3);
    EXPECT_TRUE(contains_expansion(k3, 3, expansion(k3, 3)));
    // Triangle core 0 1 2 sharing the one extra vertex 3.
    auto shared = make_hypergraph(3, 4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
    EXPECT_FALSE(contains_expansion(k3, 3, shared));
    EXPECT_TRUE(contains_weak_expansion(3, 3, shared));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_hypergraph(rng, 2, 6, 0.5);
        EXPECT_EQ(contains_expansion(k3, 2, g), oracle::contains(k3, g));
    }

    auto witness = find_expansion(k3, 3, expansion(k3, 3));
    ASSERT_TRUE(witness);
    auto h = expansion(k3, 3);
    std::vector<bool> used(h.order(), false);
    for (const auto & e : witness->edges) {
        EXPECT_TRUE(h.contains_edge(e));
        for (auto x : e)
            if (std::find(witness->core.begin(), witness->core.end(), x) == witness->core.end()) {
                EXPECT_FALSE(used[x]);
                used[x] = true;
            }
    }
    EXPECT_THROW(contains_expansion(k3, 3, complete_graph(4)), ArityError);
}

TEST(Forbid, ExpansionAgreesWithDirectEmbedding)
{
    std::mt19937_64 rng(43);
    auto target = expansion(complete_graph(3), 3);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = oracle::random_hypergraph(rng, 3, 7, 0.2);
        EXPECT_EQ(contains_expansion(complete_graph(3), 3, h), oracle::contains(target, h)) << "trial " << trial;
    }
}

TEST(Forbid, WeakExpansionExamples)
{
    auto disjoint = make_hypergraph(3, 6, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}});
    auto w = find_weak_expansion(3, 3, disjoint);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->core, (VertexSet{0, 1, 2}));
    expect_weak_witness(3, disjoint, *w);

    auto apex = make_hypergraph(3, 4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    w = find_weak_expansion(3, 3, apex);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->core, (VertexSet{0, 1, 2}));

    // Rainbow core {0, 2, 4}: each pair is completed by a vertex of the third part.
    auto t = turan(6, 3, 3);
    EXPECT_TRUE(oracle::contains_weak_expansion(3, 3, t));
    w = find_weak_expansion(3, 3, t);
    ASSERT_TRUE(w);
    expect_weak_witness(3, t, *w);

    EXPECT_FALSE(contains_weak_expansion(4, 3, complete_graph(4, 3)));
    EXPECT_FALSE(oracle::contains_weak_expansion(4, 3, complete_graph(4, 3)));
    EXPECT_TRUE(contains_weak_expansion(3, 2, complete_graph(3)));
    EXPECT_THROW(contains_weak_expansion(3, 3, complete_graph(4)), ArityError);
}

TEST(ForbidProperty, WeakExpansionAgreesWithEmbeddingOracle)
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 4 + rng() % 3;
        auto h = oracle::random_hypergraph(rng, 3, n, 0.15 + 0.1 * (trial % 4));
        for (std::size_t core : {3u, 4u}) {
            auto got = find_weak_expansion(core, 3, h);
            EXPECT_EQ(bool(got), oracle::contains_weak_expansion(core, 3, h)) << "trial " << trial;
            if (got)
                expect_weak_witness(core, h, *got);
        }
    }
}

TEST(Forbid, LPartiteExamples)
{
    auto t = turan(6, 3, 3);
    auto p = is_l_partite(t, 3);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->parts, (std::vector<VertexSet>{{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_FALSE(is_l_partite(cycle_graph(5), 2));
    EXPECT_TRUE(is_l_partite(cycle_graph(5), 3));
    EXPECT_FALSE(is_l_partite(complete_graph(4, 3), 3));
    EXPECT_TRUE(is_l_partite(complete_graph(4, 3), 4));
    EXPECT_TRUE(is_l_partite(Hypergraph(3, 4, {}), 1));
}

TEST(ForbidProperty, LPartiteAgreesWithColouringOracle)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned r = 2 + trial % 2;
        std::size_t l = r + rng() % 2;
        auto h = trial % 3 == 0 ? oracle::random_l_partite(rng, r, 7, l, 0.6) : oracle::random_hypergraph(rng, r, 6, 0.3);
        auto part = is_l_partite(h, l);
        EXPECT_EQ(bool(part), oracle::l_partite(h, l)) << "trial " << trial;
        if (part)
            expect_partition_proper(h, *part, l);
        auto colouring = find_coloring(h, k_l_r(l, r));
        EXPECT_EQ(bool(colouring), bool(part));
        if (colouring)
            EXPECT_TRUE(is_homomorphism(h, k_l_r(l, r), *colouring));
    }
}

TEST(ForbidProperty, LPartiteHostsHaveNoWeakExpansion)
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned r = 3 + trial % 2;
        std::size_t l = 2 + rng() % 2;
        auto h = oracle::random_l_partite(rng, r, 9, l, 0.7);
        ASSERT_TRUE(is_l_partite(h, l));
        EXPECT_FALSE(contains_weak_expansion(l + 1, r, h));
    }
}

TEST(ForbidProperty, ExpansionImpliesWeakExpansion)
{
    std::mt19937_64 rng(61);
    auto k3 = complete_graph(3);
    int positive = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto h = oracle::random_hypergraph(rng, 3, 7, 0.25);
        if (contains_expansion(k3, 3, h)) {
            ++positive;
            EXPECT_TRUE(contains_weak_expansion(3, 3, h));
        }
    }
    EXPECT_GT(positive, 10);
}

TEST(ForbidProperty, TriangleFreenessIsBlowupInvariant)
{
    std::mt19937_64 rng(67);
    auto triangle = ForbiddenFamily::list({Pattern(complete_graph(3))});
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_hypergraph(rng, 2, 5, 0.4);
        std::vector<std::size_t> sizes(5);
        for (auto & s : sizes)
            s = 1 + rng() % 3;
        EXPECT_EQ(is_free(triangle, blowup(g, sizes).graph), is_free(triangle, g));
    }
}

TEST(Forbid, FindColoringExamples)
{
    auto c5 = cycle_graph(5);
    std::vector<std::size_t> sizes{3, 1, 2, 2, 1};
    auto b = blowup(c5, sizes);
    auto map = find_coloring(b.graph, c5);
    ASSERT_TRUE(map);
    EXPECT_TRUE(is_homomorphism(b.graph, c5, *map));
    EXPECT_FALSE(find_coloring(c5, complete_graph(2)));
    EXPECT_THROW(find_coloring(c5, complete_graph(3, 3)), ArityError);

    // A new vertex joined to all of parts 0 and 2 fits where vertex 1 sits.
    std::vector<std::size_t> twos(5, 2);
    auto blown = blowup(c5, twos);
    auto extended = add_isolated(blown.graph, 1);
    Vertex fresh = Vertex(blown.graph.order());
    EdgeList extra;
    for (auto part : {0u, 2u})
        for (auto x : blown.partition.parts[part])
            extra.push_back({std::min(x, fresh), std::max(x, fresh)});
    extended = add_edges(extended, extra);
    map = find_coloring(extended, c5);
    ASSERT_TRUE(map);
    EXPECT_TRUE(is_homomorphism(extended, c5, *map));
}
