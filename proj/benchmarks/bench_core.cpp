#include <xh/homcount.hpp>
#include <xh/lagopt.hpp>
#include <xh/xsearch.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace xh;

namespace
{
    auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Hypergraph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution keep(p);
        EdgeList edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (keep(rng))
                    edges.push_back({a, b});
        return make_hypergraph(2, n, edges);
    }
}

static void BM_CountInjPentagon(benchmark::State & state)
{
    auto host = random_graph(state.range(0), 0.5, 1);
    Pattern q(cycle_graph(5));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_inj(q, host));
}
BENCHMARK(BM_CountInjPentagon)->Arg(10)->Arg(16)->Arg(24);

static void BM_BlowupExact(benchmark::State & state)
{
    Pattern q(cycle_graph(5));
    std::vector<std::size_t> sizes(5, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_inj_blowup_exact(q, cycle_graph(5), sizes));
}
BENCHMARK(BM_BlowupExact)->Arg(10)->Arg(100);

static void BM_CanonicalForm(benchmark::State & state)
{
    auto host = random_graph(state.range(0), 0.5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(host));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(20);

static void BM_GenerateTriangleFree(benchmark::State & state)
{
    auto family = ForbiddenFamily::list({Pattern(complete_graph(3))});
    for (auto _ : state) {
        std::size_t count = 0;
        generate_free(state.range(0), 2, family, [&](const Hypergraph &) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GenerateTriangleFree)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MaximizeLagrangian(benchmark::State & state)
{
    auto p = build_poly(Pattern(complete_graph(2)), complete_graph(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_on_simplex(p).lambda);
}
BENCHMARK(BM_MaximizeLagrangian)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
