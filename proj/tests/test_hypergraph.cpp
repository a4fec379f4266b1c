#include <xh/hypergraph.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xh;

namespace
{
    auto f5() -> Hypergraph
    {
        // 123, 124, 345 shifted to 0-based ids.
        return make_hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    }
}

TEST(Hypergraph, DeduplicatesReorderedEdges)
{
    auto h = make_hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}, {1, 2, 3}});
    EXPECT_EQ(h.size(), 2u);
    EXPECT_EQ(h.edge_list(), (EdgeList{{0, 1, 2}, {1, 2, 3}}));
}

TEST(Hypergraph, CycleConstruction)
{
    auto h = make_hypergraph(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(h, cycle_graph(5));
    EXPECT_EQ(h.order(), 5u);
}

TEST(Hypergraph, RejectsBadEdges)
{
    try {
        make_hypergraph(3, 4, {{0, 1, 2}, {0, 1, 1}});
        FAIL();
    } catch (const ConstructionError & e) {
        EXPECT_EQ(e.edge_index(), 1u);
        EXPECT_NE(std::string(e.what()).find("repeated vertex"), std::string::npos);
    }
    EXPECT_THROW(make_hypergraph(2, 3, {{0, 3}}), ConstructionError);
    EXPECT_THROW(make_hypergraph(2, 3, {{0, 1, 2}}), ConstructionError);
    EXPECT_THROW(make_hypergraph(1, 3, {{0}}), ArityError);
}

TEST(Hypergraph, Links)
{
    EXPECT_EQ(link(cycle_graph(5), {0}), (EdgeList{{1}, {4}}));
    EXPECT_EQ(link(complete_graph(3, 3), {0, 1}), (EdgeList{{2}}));
    EXPECT_EQ(link(f5(), {2, 3}), (EdgeList{{4}}));
    EXPECT_EQ(degree(f5(), {0, 1}), 2u);
    EXPECT_THROW(link(f5(), {}), ArityError);
    EXPECT_THROW(link(f5(), {0, 1, 2}), ArityError);
}

TEST(Hypergraph, Shadows)
{
    EXPECT_EQ(shadow(complete_graph(3, 3), 2), complete_graph(3));
    auto t = turan(6, 3, 3);
    std::vector<std::size_t> parts{2, 2, 2};
    EXPECT_EQ(shadow(t, 2), complete_multipartite(2, parts));
    auto singletons = shadow(cycle_graph(5), 1);
    EXPECT_EQ(singletons.uniformity(), 1u);
    EXPECT_EQ(singletons.size(), 5u);
}

TEST(Hypergraph, InducedAndRemoveVertex)
{
    auto p = remove_vertex(cycle_graph(5), 0);
    EXPECT_EQ(p, path_graph(4));
    EXPECT_EQ(p.size(), 3u);

    auto t = turan(6, 3, 3);
    for (Vertex skip = 0; skip < 6; ++skip) {
        VertexSet s;
        for (Vertex v = 0; v < 6; ++v)
            if (v != skip)
                s.push_back(v);
        EXPECT_EQ(induced(t, s).size(), 4u);
    }
    auto none = induced(t, {});
    EXPECT_EQ(none.order(), 0u);
    EXPECT_TRUE(none.empty());
}

TEST(Hypergraph, Neighborhoods)
{
    EXPECT_EQ(neighborhood(cycle_graph(5), 0), (VertexSet{1, 4}));
    auto one = complete_graph(3, 3);
    auto cover = cover_neighborhood(one, 0, 0.1);
    EXPECT_EQ(cover, (VertexSet{1, 2}));
}

TEST(Hypergraph, CoverNeighborhoodThreshold)
{
    // t edges {0, 1, x} in a 3-graph; d(01) = t and the threshold is 3k * C(n, 0) = 3k.
    for (std::size_t t = 1; t <= 6; ++t) {
        EdgeList edges;
        for (std::size_t x = 0; x < t; ++x)
            edges.push_back({0, 1, Vertex(2 + x)});
        auto h = make_hypergraph(3, 2 + t, edges);
        for (double k : {0.5, 1.0, 1.5, 2.0}) {
            auto cover = cover_neighborhood(h, 0, k);
            bool has_one = std::find(cover.begin(), cover.end(), 1u) != cover.end();
            EXPECT_EQ(has_one, double(t) >= 3 * k) << "t=" << t << " k=" << k;
        }
    }
}

TEST(Hypergraph, Blowups)
{
    std::vector<std::size_t> twos{2, 2};
    EXPECT_EQ(blowup(complete_graph(2), twos).graph.size(), 4u);
    std::vector<std::size_t> fives{2, 2, 2, 2, 2};
    auto b = blowup(cycle_graph(5), fives);
    EXPECT_EQ(b.graph.order(), 10u);
    EXPECT_EQ(b.graph.size(), 20u);
    EXPECT_EQ(b.partition.parts.size(), 5u);
    std::vector<std::size_t> mixed{1, 1, 2};
    EXPECT_EQ(blowup(complete_graph(3, 3), mixed).graph.size(), 2u);
    std::vector<std::size_t> zero{0, 3};
    EXPECT_EQ(blowup(complete_graph(2), zero).graph.size(), 0u);
}

TEST(Hypergraph, BlowupTransversalCount)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned r = 2 + trial % 3;
        std::size_t m = r + rng() % 4;
        auto g = oracle::random_hypergraph(rng, r, m, 0.5);
        std::vector<std::size_t> sizes(m);
        for (auto & s : sizes)
            s = rng() % 4;
        Count expected = 0;
        for (auto e : g.edges()) {
            Count prod = 1;
            for (auto v : e)
                prod *= sizes[v];
            expected += prod;
        }
        auto b = blowup(g, sizes);
        EXPECT_EQ(Count(b.graph.size()), expected);
        b.partition.validate();
    }
}

TEST(Hypergraph, CompleteMultipartite)
{
    EXPECT_EQ(turan(6, 3, 3).size(), 8u);
    auto k32 = turan(5, 2, 2);
    EXPECT_EQ(k32.size(), 6u);
    EXPECT_EQ(balanced_parts(5, 2), (std::vector<std::size_t>{3, 2}));
    std::vector<std::size_t> ones{1, 1, 1};
    EXPECT_EQ(complete_multipartite(3, ones).size(), 1u);
    std::vector<std::size_t> two{3, 3};
    EXPECT_EQ(complete_multipartite(3, two).size(), 0u);
}

TEST(Hypergraph, Expansions)
{
    auto e = expansion(complete_graph(3), 3);
    EXPECT_EQ(e.order(), 6u);
    EXPECT_EQ(e.size(), 3u);
    EXPECT_EQ(expansion(complete_graph(3), 2), complete_graph(3));
    auto c = expansion(cycle_graph(5), 3);
    EXPECT_EQ(c.order(), 10u);
    EXPECT_EQ(c.size(), 5u);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = oracle::random_hypergraph(rng, 2, 5, 0.5);
        for (unsigned r = 2; r <= 5; ++r)
            EXPECT_EQ(expansion(f, r).order(), f.order() + (r - 2) * f.size());
    }
}

TEST(Hypergraph, TwoCovered)
{
    EXPECT_TRUE(is_2_covered(complete_graph(3, 3)));
    EXPECT_FALSE(is_2_covered(f5()));
    EXPECT_TRUE(is_2_covered(complete_graph(5)));
    EXPECT_FALSE(is_2_covered(cycle_graph(5)));
}

TEST(Hypergraph, SymmetrizeMove)
{
    auto c5 = cycle_graph(5);
    EXPECT_TRUE(uncovered_pair(c5, 0, 2));
    EXPECT_FALSE(uncovered_pair(c5, 0, 1));
    auto moved = symmetrize_move(c5, 0, 2);
    EXPECT_EQ(link(moved, {0}), (EdgeList{{1}, {3}}));
    EXPECT_EQ(link(moved, {2}), (EdgeList{{1}, {3}}));
    EXPECT_TRUE(equivalent_pair(moved, 0, 2));
    EXPECT_THROW(symmetrize_move(c5, 0, 1), Error);

    std::vector<std::size_t> twos{2, 2};
    auto k22 = blowup(complete_graph(2), twos).graph;
    EXPECT_TRUE(equivalent_pair(k22, 0, 1));
    EXPECT_EQ(symmetrize_move(k22, 0, 1), k22);
}

TEST(Hypergraph, SymmetrizeMoveMakesTwins)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned r = 2 + trial % 2;
        auto h = oracle::random_hypergraph(rng, r, 7, 0.3);
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = 0; v < 7; ++v) {
                if (u == v || ! uncovered_pair(h, u, v))
                    continue;
                auto moved = symmetrize_move(h, u, v);
                EXPECT_TRUE(equivalent_pair(moved, u, v));
                if (equivalent_pair(h, u, v))
                    EXPECT_EQ(moved, h);
            }
    }
}

TEST(Hypergraph, ShadowOfInducedSitsInsideInducedShadow)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = oracle::random_hypergraph(rng, 3, 7, 0.25);
        VertexSet s;
        for (Vertex v = 0; v < 7; ++v)
            if (rng() % 2)
                s.push_back(v);
        auto lhs = shadow(induced(h, s), 2);
        auto rhs = induced(shadow(h, 2), s);
        // Every pair of the left side is also on the right side.
        for (auto e : lhs.edges())
            EXPECT_TRUE(rhs.contains_edge(e));
    }
}

TEST(Hypergraph, RelabelRoundTrip)
{
    auto h = f5();
    std::vector<Vertex> perm{4, 2, 0, 1, 3}, inverse(5);
    for (Vertex v = 0; v < 5; ++v)
        inverse[perm[v]] = v;
    EXPECT_EQ(relabel(relabel(h, perm), inverse), h);
    EXPECT_EQ(add_isolated(h, 2).order(), 7u);
    EXPECT_EQ(add_edges(h, {{0, 1, 2}}), h);
}

TEST(VertexPartition, Validation)
{
    VertexPartition ok{4, {{0, 2}, {}, {1, 3}}};
    EXPECT_NO_THROW(ok.validate());
    EXPECT_EQ(ok.sizes(), (std::vector<std::size_t>{2, 0, 2}));
    EXPECT_EQ(ok.part_of(), (std::vector<std::size_t>{0, 2, 0, 2}));
    VertexPartition overlap{3, {{0, 1}, {1, 2}}};
    EXPECT_THROW(overlap.validate(), Error);
    VertexPartition missing{3, {{0, 1}}};
    EXPECT_THROW(missing.validate(), Error);
    VertexPartition none{0, {}};
    EXPECT_THROW(none.validate(), Error);
}
