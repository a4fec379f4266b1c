#include <xh/forbid.hpp>

#include "combinatorics.hpp"
#include "matcher.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace xh
{
    namespace
    {
        void require_uniformity(const Hypergraph & h, unsigned r, const char * what)
        {
            if (h.uniformity() != r)
                throw ArityError(std::string(what) + ": host is " + std::to_string(h.uniformity()) +
                        "-uniform, expected " + std::to_string(r));
        }

        class BudgetCounter
        {
        public:
            explicit BudgetCounter(std::uint64_t budget) : left_(budget) {}

            void tick()
            {
                if (left_ == 0)
                    throw UndecidedError("containment search exceeded its node budget");
                --left_;
            }

        private:
            std::uint64_t left_;
        };

        /// Pair links of an r-graph: for each pair {a, b}, the (r-2)-sets completing it.
        class PairLinks
        {
        public:
            explicit PairLinks(const Hypergraph & h) : n_(h.order()), links_(h.order() * h.order())
            {
                const unsigned r = h.uniformity();
                for (auto e : h.edges())
                    for (unsigned i = 0; i < r; ++i)
                        for (unsigned j = i + 1; j < r; ++j) {
                            VertexSet rest;
                            for (unsigned k = 0; k < r; ++k)
                                if (k != i && k != j)
                                    rest.push_back(e[k]);
                            links_[e[i] * n_ + e[j]].push_back(rest);
                            links_[e[j] * n_ + e[i]].push_back(std::move(rest));
                        }
            }

            auto of(Vertex a, Vertex b) const -> const EdgeList & { return links_[a * n_ + b]; }

        private:
            std::size_t n_;
            std::vector<EdgeList> links_;
        };

        auto disjoint_from(const VertexSet & s, const std::vector<bool> & blocked) -> bool
        {
            return std::none_of(s.begin(), s.end(), [&](Vertex v) { return blocked[v]; });
        }

        /// Greedy maximal matching size in a set family; a lower bound on the
        /// maximum number of pairwise disjoint members.
        auto greedy_disjoint(const EdgeList & sets, std::size_t n) -> std::size_t
        {
            std::vector<bool> used(n, false);
            std::size_t taken = 0;
            for (const auto & s : sets)
                if (disjoint_from(s, used)) {
                    for (auto v : s)
                        used[v] = true;
                    ++taken;
                }
            return taken;
        }

        struct DisjointSystemSearch
        {
            const std::vector<EdgeList> & options;
            std::vector<bool> blocked;
            std::vector<std::size_t> chosen;
            BudgetCounter & budget;

            auto run(std::size_t k) -> bool
            {
                if (k == options.size())
                    return true;
                for (std::size_t i = 0; i < options[k].size(); ++i) {
                    budget.tick();
                    const auto & s = options[k][i];
                    if (! disjoint_from(s, blocked))
                        continue;
                    for (auto v : s)
                        blocked[v] = true;
                    chosen[k] = i;
                    if (run(k + 1))
                        return true;
                    for (auto v : s)
                        blocked[v] = false;
                }
                return false;
            }
        };

        /// Automorphism orbits of g, or singletons if there are too many automorphisms to list.
        auto orbit_representatives(const Hypergraph & g) -> std::vector<Vertex>
        {
            const std::size_t n = g.order();
            std::vector<Vertex> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](Vertex v) {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            };

            constexpr std::size_t cap = 200000;
            std::size_t seen = 0;
            bool complete = true;
            detail::HostIndex host(g);
            detail::PatternPlan plan(g);
            detail::Matcher m(plan, host, {true, {}});
            m.run([&](std::span<const Vertex> map) {
                if (++seen > cap) {
                    complete = false;
                    return false;
                }
                for (Vertex v = 0; v < n; ++v) {
                    auto a = find(v), b = find(map[v]);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }
                return true;
            });

            std::vector<Vertex> reps;
            for (Vertex v = 0; v < n; ++v)
                if (! complete || find(v) == v)
                    reps.push_back(v);
            return reps;
        }
    }

    auto default_node_budget() -> std::uint64_t
    {
        if (const char * env = std::getenv("XH_NODE_BUDGET")) {
            char * end = nullptr;
            auto value = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0')
                return value;
        }
        return 100'000'000ULL;
    }

    auto ForbiddenFamily::list(std::vector<Pattern> patterns, std::optional<unsigned> r) -> ForbiddenFamily
    {
        for (const auto & p : patterns) {
            if (! r)
                r = p.uniformity();
            else if (*r != p.uniformity())
                throw ArityError("forbidden list mixes uniformities");
        }
        return ForbiddenFamily(ExplicitList{std::move(patterns)}, r);
    }

    auto ForbiddenFamily::expansion(Hypergraph base, unsigned r) -> ForbiddenFamily
    {
        if (base.uniformity() != 2)
            throw ArityError("expansion family: base must be a graph");
        if (r < 2)
            throw ArityError("expansion family: r must be at least 2");
        return ForbiddenFamily(Expansion{std::move(base), r}, r);
    }

    auto ForbiddenFamily::weak_expansion(std::size_t core_order, unsigned r) -> ForbiddenFamily
    {
        if (r < 2)
            throw ArityError("weak expansion family: r must be at least 2");
        if (core_order < r)
            throw ArityError("weak expansion family: clique order must be at least r");
        return ForbiddenFamily(WeakExpansion{core_order, r}, r);
    }

    auto ForbiddenFamily::describe() const -> std::string
    {
        struct Describe
        {
            auto operator()(const ExplicitList & l) const -> std::string
            {
                return "list(" + std::to_string(l.patterns.size()) + " patterns)";
            }
            auto operator()(const Expansion & e) const -> std::string
            {
                return "expansion(F on " + std::to_string(e.base.order()) + " vertices, r=" + std::to_string(e.r) + ")";
            }
            auto operator()(const WeakExpansion & w) const -> std::string
            {
                return "weakexp(K_" + std::to_string(w.core_order) + ", r=" + std::to_string(w.r) + ")";
            }
        };
        return std::visit(Describe{}, variant_);
    }

    auto ForbiddenFamily::blowup_invariant() const -> bool
    {
        if (std::holds_alternative<WeakExpansion>(variant_))
            return true;
        if (auto * l = std::get_if<ExplicitList>(&variant_))
            return std::all_of(l->patterns.begin(), l->patterns.end(),
                    [](const Pattern & p) { return is_2_covered(p.graph()); });
        return false;
    }

    auto find_subgraph(const Pattern & p, const Hypergraph & h) -> std::optional<std::vector<Vertex>>
    {
        return find_inj(p.graph(), h);
    }

    auto contains_subgraph(const Pattern & p, const Hypergraph & h) -> bool
    {
        return find_subgraph(p, h).has_value();
    }

    auto contains_subgraph_through(const Pattern & p, const Hypergraph & h, std::span<const Vertex> e) -> bool
    {
        const auto & q = p.graph();
        if (q.uniformity() != h.uniformity())
            throw ArityError("contains_subgraph_through: uniformity mismatch");
        if (h.order() < q.order())
            return false;
        detail::HostIndex host(h);
        const unsigned r = q.uniformity();
        std::vector<Vertex> target(e.begin(), e.end());
        for (auto f : q.edges()) {
            detail::PatternPlan plan(q, f);
            std::sort(target.begin(), target.end());
            do {
                detail::SearchOptions options{true, std::vector<std::optional<detail::Bitset>>(q.order())};
                for (unsigned i = 0; i < r; ++i) {
                    detail::Bitset only(h.order());
                    only.set(target[i]);
                    options.domains[f[i]] = std::move(only);
                }
                detail::Matcher m(plan, host, std::move(options));
                bool found = false;
                m.run([&](std::span<const Vertex>) {
                    found = true;
                    return false;
                });
                if (found)
                    return true;
            } while (std::next_permutation(target.begin(), target.end()));
        }
        return false;
    }

    auto is_free(const ForbiddenFamily & family, const Hypergraph & h, std::uint64_t budget) -> bool
    {
        if (auto r = family.uniformity(); r && *r != h.uniformity())
            throw ArityError("family is " + std::to_string(*r) + "-uniform but host is " +
                    std::to_string(h.uniformity()) + "-uniform");
        const auto & v = family.variant();
        if (auto * l = std::get_if<ForbiddenFamily::ExplicitList>(&v))
            return std::none_of(l->patterns.begin(), l->patterns.end(),
                    [&](const Pattern & p) { return contains_subgraph(p, h); });
        if (auto * e = std::get_if<ForbiddenFamily::Expansion>(&v))
            return ! contains_expansion(e->base, e->r, h, budget);
        const auto & w = std::get<ForbiddenFamily::WeakExpansion>(v);
        return ! contains_weak_expansion(w.core_order, w.r, h);
    }

    auto find_expansion(const Hypergraph & f, unsigned r, const Hypergraph & h, std::uint64_t budget)
        -> std::optional<ExpansionWitness>
    {
        if (f.uniformity() != 2)
            throw ArityError("find_expansion: F must be a graph");
        require_uniformity(h, r, "find_expansion");
        if (r == 2) {
            auto map = find_inj(f, h);
            if (! map)
                return std::nullopt;
            ExpansionWitness w{*map, {}};
            for (auto e : f.edges()) {
                VertexSet s{(*map)[e[0]], (*map)[e[1]]};
                std::sort(s.begin(), s.end());
                w.edges.push_back(std::move(s));
            }
            return w;
        }

        const auto host_shadow = shadow(h, 2);
        const PairLinks links(h);
        const std::size_t greedy_need = f.order() + (r - 2) * f.size();
        BudgetCounter counter(budget);
        std::optional<ExpansionWitness> result;

        detail::HostIndex host(host_shadow);
        detail::PatternPlan plan(f);
        detail::Matcher m(plan, host, {true, {}});
        m.run([&](std::span<const Vertex> map) {
            counter.tick();
            std::vector<bool> blocked(h.order(), false);
            for (auto v : map)
                blocked[v] = true;

            bool greedy = true;
            std::vector<EdgeList> options;
            for (auto e : f.edges()) {
                const auto & pair_link = links.of(map[e[0]], map[e[1]]);
                if (greedy && greedy_disjoint(pair_link, h.order()) < greedy_need)
                    greedy = false;
                EdgeList usable;
                for (const auto & s : pair_link)
                    if (disjoint_from(s, blocked))
                        usable.push_back(s);
                options.push_back(std::move(usable));
            }

            ExpansionWitness w{std::vector<Vertex>(map.begin(), map.end()), {}};
            auto finish = [&](const std::vector<VertexSet> & extras) {
                std::size_t k = 0;
                for (auto e : f.edges()) {
                    VertexSet edge{map[e[0]], map[e[1]]};
                    edge.insert(edge.end(), extras[k].begin(), extras[k].end());
                    std::sort(edge.begin(), edge.end());
                    w.edges.push_back(std::move(edge));
                    ++k;
                }
                result = std::move(w);
            };

            // Visiting edges with fewest options first keeps the tree narrow.
            std::vector<std::size_t> order(options.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                    [&](std::size_t a, std::size_t b) { return options[a].size() < options[b].size(); });

            if (greedy) {
                // Enough disjoint members everywhere: greedy picking cannot get stuck.
                std::vector<VertexSet> extras(options.size());
                for (auto k : order)
                    for (const auto & s : options[k])
                        if (disjoint_from(s, blocked)) {
                            for (auto v : s)
                                blocked[v] = true;
                            extras[k] = s;
                            break;
                        }
                finish(extras);
                return false;
            }

            std::vector<EdgeList> sorted_options;
            for (auto k : order)
                sorted_options.push_back(options[k]);
            DisjointSystemSearch search{sorted_options, blocked, std::vector<std::size_t>(order.size()), counter};
            if (! search.run(0))
                return true;
            std::vector<VertexSet> extras(options.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                extras[order[i]] = sorted_options[i][search.chosen[i]];
            finish(extras);
            return false;
        });
        return result;
    }

    auto contains_expansion(const Hypergraph & f, unsigned r, const Hypergraph & h, std::uint64_t budget) -> bool
    {
        return find_expansion(f, r, h, budget).has_value();
    }

    auto find_weak_expansion(std::size_t core_order, unsigned r, const Hypergraph & h) -> std::optional<WeakExpansionWitness>
    {
        require_uniformity(h, r, "find_weak_expansion");
        const std::size_t n = h.order();
        if (core_order > n)
            return std::nullopt;

        // Edges through each pair, as edge indices.
        std::vector<std::vector<std::size_t>> through(n * n);
        for (std::size_t i = 0; i < h.size(); ++i) {
            auto e = h.edge(i);
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b)
                    through[e[a] * n + e[b]].push_back(i);
        }

        std::vector<bool> in_core(n, false);
        VertexSet core;

        // The witness edge for {u, v}: meets the current core in exactly {u, v}.
        auto witness = [&](Vertex u, Vertex v) -> std::optional<std::size_t> {
            for (auto i : through[std::min(u, v) * n + std::max(u, v)]) {
                auto e = h.edge(i);
                std::size_t inside = 0;
                for (auto x : e)
                    if (in_core[x])
                        ++inside;
                if (inside == 2)
                    return i;
            }
            return std::nullopt;
        };

        auto consistent = [&]() {
            for (std::size_t a = 0; a < core.size(); ++a)
                for (std::size_t b = a + 1; b < core.size(); ++b)
                    if (! witness(core[a], core[b]))
                        return false;
            return true;
        };

        std::optional<WeakExpansionWitness> result;
        auto search = [&](auto & self, Vertex from) -> bool {
            if (core.size() == core_order) {
                WeakExpansionWitness w{core, {}};
                for (std::size_t a = 0; a < core.size(); ++a)
                    for (std::size_t b = a + 1; b < core.size(); ++b) {
                        auto e = h.edge(*witness(core[a], core[b]));
                        w.edges.emplace_back(e.begin(), e.end());
                    }
                result = std::move(w);
                return true;
            }
            for (Vertex v = from; v + (core_order - core.size()) <= n; ++v) {
                bool adjacent = std::all_of(core.begin(), core.end(),
                        [&](Vertex u) { return ! through[std::min(u, v) * n + std::max(u, v)].empty(); });
                if (! adjacent)
                    continue;
                core.push_back(v);
                in_core[v] = true;
                if (consistent() && self(self, v + 1))
                    return true;
                in_core[v] = false;
                core.pop_back();
            }
            return false;
        };
        search(search, 0);
        return result;
    }

    auto contains_weak_expansion(std::size_t core_order, unsigned r, const Hypergraph & h) -> bool
    {
        return find_weak_expansion(core_order, r, h).has_value();
    }

    auto is_l_partite(const Hypergraph & h, std::size_t l) -> std::optional<VertexPartition>
    {
        if (l == 0)
            throw Error("is_l_partite: need at least one part");
        const std::size_t n = h.order();
        VertexPartition out{n, std::vector<VertexSet>(l)};
        if (h.uniformity() == 1) {
            for (Vertex v = 0; v < n; ++v)
                out.parts[0].push_back(v);
            return out;
        }

        std::vector<std::vector<Vertex>> adj(n);
        {
            auto s = h.uniformity() == 2 ? h : shadow(h, 2);
            for (auto e : s.edges()) {
                adj[e[0]].push_back(e[1]);
                adj[e[1]].push_back(e[0]);
            }
        }

        // DSATUR with backtracking; new colours are only opened in order.
        constexpr std::size_t none = ~std::size_t{0};
        std::vector<std::size_t> colour(n, none);
        std::vector<std::vector<std::size_t>> blocked(n, std::vector<std::size_t>(l, 0));

        auto pick = [&]() -> std::size_t {
            std::size_t best = none, best_sat = 0, best_deg = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (colour[v] != none)
                    continue;
                std::size_t sat = 0;
                for (std::size_t c = 0; c < l; ++c)
                    if (blocked[v][c])
                        ++sat;
                std::size_t deg = 0;
                for (auto u : adj[v])
                    if (colour[u] == none)
                        ++deg;
                if (best == none || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            return best;
        };

        auto search = [&](auto & self, std::size_t coloured, std::size_t opened) -> bool {
            if (coloured == n)
                return true;
            auto v = pick();
            for (std::size_t c = 0; c < std::min(l, opened + 1); ++c) {
                if (blocked[v][c])
                    continue;
                colour[v] = c;
                for (auto u : adj[v])
                    ++blocked[u][c];
                if (self(self, coloured + 1, std::max(opened, c + 1)))
                    return true;
                for (auto u : adj[v])
                    --blocked[u][c];
                colour[v] = none;
            }
            return false;
        };
        if (! search(search, 0, 0))
            return std::nullopt;
        for (Vertex v = 0; v < n; ++v)
            out.parts[colour[v]].push_back(v);
        return out;
    }

    auto find_coloring(const Hypergraph & h, const Hypergraph & g) -> std::optional<std::vector<Vertex>>
    {
        if (h.uniformity() != g.uniformity())
            throw ArityError("find_coloring: uniformity mismatch");
        if (h.order() == 0)
            return std::vector<Vertex>{};
        if (g.order() == 0)
            return std::nullopt;

        detail::HostIndex host(g);
        detail::PatternPlan plan(h);
        detail::SearchOptions options{false, std::vector<std::optional<detail::Bitset>>(h.order())};
        detail::Bitset first(g.order());
        for (auto v : orbit_representatives(g))
            first.set(v);
        options.domains[plan.order[0]] = std::move(first);

        detail::Matcher m(plan, host, std::move(options));
        std::optional<std::vector<Vertex>> found;
        m.run([&](std::span<const Vertex> map) {
            found.emplace(map.begin(), map.end());
            return false;
        });
        return found;
    }
}
