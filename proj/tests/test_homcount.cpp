#include <xh/homcount.hpp>
#include <xh/parallel.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xh;

namespace
{
    auto sizes_of(std::initializer_list<std::size_t> s) { return std::vector<std::size_t>(s); }

    /// Random pattern without isolated vertices: a random hypergraph restricted to touched vertices.
    auto random_pattern(std::mt19937_64 & rng, unsigned r, std::size_t max_order) -> Pattern
    {
        while (true) {
            auto g = oracle::random_hypergraph(rng, r, r + rng() % (max_order - r + 1), 0.5);
            VertexSet touched;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) > 0)
                    touched.push_back(v);
            if (! touched.empty())
                return Pattern(induced(g, touched));
        }
    }
}

TEST(Pattern, RejectsIsolatedVertices)
{
    EXPECT_THROW(Pattern(add_isolated(complete_graph(2), 1)), Error);
    EXPECT_EQ(Pattern(cycle_graph(5)).aut_count(), 10u);
    EXPECT_EQ(Pattern(complete_graph(3, 3)).aut_count(), 6u);
}

TEST(Homcount, HomExamples)
{
    EXPECT_EQ(count_hom(Pattern(cycle_graph(5)), cycle_graph(5)), 10u);
    EXPECT_EQ(oracle::hom(cycle_graph(5), cycle_graph(5)), 10u);
    for (std::size_t l = 2; l <= 7; ++l)
        EXPECT_EQ(count_hom(Pattern(complete_graph(2)), complete_graph(l)), Count(l * (l - 1)));
    EXPECT_EQ(count_hom(Pattern(path_graph(3)), complete_graph(2)), 2u);
    EXPECT_EQ(oracle::hom(path_graph(3), complete_graph(2)), 2u);
}

TEST(Homcount, InjExamples)
{
    auto c5 = Pattern(cycle_graph(5));
    EXPECT_EQ(count_inj(c5, blowup(cycle_graph(5), sizes_of({1, 1, 1, 1, 1})).graph), 10u);
    EXPECT_EQ(count_inj(c5, blowup(cycle_graph(5), sizes_of({2, 2, 2, 2, 2})).graph), 320u);
    EXPECT_EQ(count_inj(Pattern(complete_graph(3)), turan(6, 3, 2)), 48u);
    EXPECT_EQ(count_inj(c5, cycle_graph(4)), 0u);
    EXPECT_THROW(count_inj(c5, complete_graph(4, 3)), ArityError);
    EXPECT_THROW(count_hom(c5, complete_graph(4, 3)), ArityError);
}

TEST(Homcount, Enumeration)
{
    std::vector<std::vector<Vertex>> seen;
    enumerate_inj(Pattern(complete_graph(2)), complete_graph(2), [&](std::span<const Vertex> m) {
        seen.emplace_back(m.begin(), m.end());
    });
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 0}}));

    std::size_t count = 0;
    enumerate_inj(Pattern(cycle_graph(5)), cycle_graph(5), [&](std::span<const Vertex>) { ++count; });
    EXPECT_EQ(count, 10u);
    count = 0;
    enumerate_inj(Pattern(complete_graph(3)), cycle_graph(5), [&](std::span<const Vertex>) { ++count; });
    EXPECT_EQ(count, 0u);
}

TEST(Homcount, EnumerationIsDeterministicAndValid)
{
    std::mt19937_64 rng(2);
    auto host = oracle::random_hypergraph(rng, 2, 8, 0.5);
    auto q = Pattern(path_graph(4));
    std::vector<std::vector<Vertex>> first, second;
    enumerate_inj(q, host, [&](std::span<const Vertex> m) { first.emplace_back(m.begin(), m.end()); });
    enumerate_inj(q, host, [&](std::span<const Vertex> m) { second.emplace_back(m.begin(), m.end()); });
    EXPECT_EQ(first, second);
    EXPECT_EQ(Count(first.size()), count_inj(q, host));
    for (const auto & m : first)
        EXPECT_TRUE(is_homomorphism(q.graph(), host, m));
    auto sorted = first;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
}

TEST(Homcount, QDegrees)
{
    auto c5 = Pattern(cycle_graph(5));
    for (auto d : q_degrees(c5, cycle_graph(5)))
        EXPECT_EQ(d, 10u);
    auto star = star_graph(3);
    auto k2 = Pattern(complete_graph(2));
    EXPECT_EQ(q_degree(k2, star, 0), 6u);
    for (Vertex leaf = 1; leaf <= 3; ++leaf)
        EXPECT_EQ(q_degree(k2, star, leaf), 2u);
    auto stats = q_degree_stats(k2, star);
    EXPECT_EQ(stats.min, 2u);
    EXPECT_EQ(stats.max, 6u);
    EXPECT_DOUBLE_EQ(stats.mean, 3.0);
}

TEST(Homcount, AutomorphismsAndExValues)
{
    auto c5 = Pattern(cycle_graph(5));
    EXPECT_EQ(automorphism_count(c5), 10u);
    EXPECT_EQ(automorphism_count(Pattern(complete_graph(3, 3))), 6u);
    auto ex = ex_from_inj(320, c5);
    EXPECT_EQ(ex.num, 32u);
    EXPECT_EQ(ex.den, 1u);
    auto frac = ex_from_inj(15, c5);
    EXPECT_EQ(frac.num, 3u);
    EXPECT_EQ(frac.den, 2u);
}

TEST(Homcount, BlowupExactExamples)
{
    EXPECT_EQ(count_inj_blowup_exact(Pattern(cycle_graph(5)), cycle_graph(5), sizes_of({2, 2, 2, 2, 2})), 320u);
    for (std::size_t a = 0; a <= 4; ++a)
        for (std::size_t b = 0; b <= 4; ++b)
            EXPECT_EQ(count_inj_blowup_exact(Pattern(complete_graph(2)), complete_graph(2), sizes_of({a, b})), Count(2 * a * b));
    auto p3 = Pattern(path_graph(3));
    EXPECT_EQ(count_inj_blowup_exact(p3, complete_graph(2), sizes_of({2, 2})), 8u);
    EXPECT_EQ(count_inj(p3, blowup(complete_graph(2), sizes_of({2, 2})).graph), 8u);
}

TEST(HomcountProperty, AgreesWithBruteForce)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned r = 2 + trial % 2;
        auto q = random_pattern(rng, r, 5);
        auto h = oracle::random_hypergraph(rng, r, 3 + rng() % 4, 0.5);
        EXPECT_EQ(count_hom(q, h), oracle::hom(q.graph(), h)) << "trial " << trial;
        EXPECT_EQ(count_inj(q, h), oracle::inj(q.graph(), h)) << "trial " << trial;
    }
}

TEST(HomcountProperty, InjAtMostHomWithEqualityWhenTwoCovered)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned r = 2 + trial % 3;
        auto q = random_pattern(rng, r, r + 2);
        auto h = oracle::random_hypergraph(rng, r, 6, 0.4);
        auto inj = count_inj(q, h), hom = count_hom(q, h);
        EXPECT_LE(inj, hom);
        if (is_2_covered(q.graph()))
            EXPECT_EQ(inj, hom);
    }
}

TEST(HomcountProperty, DegreeSumIdentity)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned r = 2 + trial % 2;
        auto q = random_pattern(rng, r, 5);
        auto h = oracle::random_hypergraph(rng, r, 5 + rng() % 4, 0.5);
        Count sum = 0;
        auto all = q_degrees(q, h);
        for (Vertex v = 0; v < h.order(); ++v) {
            sum += all[v];
            if (v < 2)
                EXPECT_EQ(all[v], q_degree(q, h, v));
        }
        EXPECT_EQ(sum, Count(q.order()) * count_inj(q, h));
    }
}

TEST(HomcountProperty, ShadowInequality)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        auto q = random_pattern(rng, 3, 5);
        auto h = oracle::random_hypergraph(rng, 3, 6, 0.5);
        EXPECT_LE(count_inj(q, h), count_inj(Pattern(shadow(q.graph(), 2)), shadow(h, 2)));
        std::vector<std::size_t> parts(3 + rng() % 2);
        for (auto & p : parts)
            p = 1 + rng() % 2;
        auto k = complete_multipartite(3, parts);
        EXPECT_EQ(count_inj(q, k), count_inj(Pattern(shadow(q.graph(), 2)), shadow(k, 2)));
    }
}

TEST(HomcountProperty, BlowupExactMatchesMaterialized)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned r = 2 + trial % 2;
        auto q = random_pattern(rng, r, 4);
        auto g = oracle::random_hypergraph(rng, r, r + rng() % 3, 0.6);
        std::vector<std::size_t> sizes(g.order());
        for (auto & s : sizes)
            s = rng() % 4;
        EXPECT_EQ(count_inj_blowup_exact(q, g, sizes), count_inj(q, blowup(g, sizes).graph));
    }
}

TEST(HomcountProperty, SmallHostGivesZero)
{
    auto q = Pattern(cycle_graph(6));
    for (std::size_t n = 0; n < 6; ++n)
        EXPECT_EQ(count_inj(q, complete_graph(n)), 0u);
}

TEST(HomcountProperty, ThreadCountDoesNotChangeCounts)
{
    std::mt19937_64 rng(37);
    auto h = oracle::random_hypergraph(rng, 2, 12, 0.5);
    auto q = Pattern(cycle_graph(5));
    set_max_threads(1);
    auto one = count_inj(q, h);
    auto hom_one = count_hom(q, h);
    set_max_threads(4);
    EXPECT_EQ(count_inj(q, h), one);
    EXPECT_EQ(count_hom(q, h), hom_one);
    set_max_threads(0);
}

TEST(Homcount, FindInjAcceptsIsolatedSource)
{
    auto from = add_isolated(complete_graph(2), 1);
    auto map = find_inj(from, path_graph(3));
    ASSERT_TRUE(map);
    EXPECT_TRUE(is_homomorphism(from, path_graph(3), *map));
    EXPECT_FALSE(find_inj(add_isolated(complete_graph(2), 2), path_graph(3)));
}
