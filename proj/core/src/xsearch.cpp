#include <xh/lagopt.hpp>
#include <xh/parallel.hpp>
#include <xh/xsearch.hpp>

#include "combinatorics.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace xh
{
    namespace
    {
        /// Individualization-refinement canonical labeling. Colours are cell
        /// starts: colour(v) = number of vertices in strictly smaller cells.
        class Canonizer
        {
        public:
            explicit Canonizer(const Hypergraph & h) : h_(h), n_(h.order()), incident_(h.order())
            {
                for (std::size_t i = 0; i < h.size(); ++i)
                    for (auto v : h.edge(i))
                        incident_[v].push_back(i);
                seed_twins();
            }

            auto run() -> std::vector<Vertex>
            {
                std::vector<Vertex> colour(n_, 0);
                std::vector<Vertex> prefix;
                search(std::move(colour), prefix);
                return best_label_;
            }

        private:
            void seed_twins()
            {
                std::vector<Vertex> perm(n_);
                std::iota(perm.begin(), perm.end(), 0);
                for (Vertex u = 0; u < n_; ++u)
                    for (Vertex v = u + 1; v < n_; ++v) {
                        if (incident_[u].size() != incident_[v].size())
                            continue;
                        std::swap(perm[u], perm[v]);
                        if (relabel(h_, perm) == h_)
                            generators_.push_back(perm);
                        std::swap(perm[u], perm[v]);
                    }
            }

            auto cell_count(const std::vector<Vertex> & colour) const -> std::size_t
            {
                std::vector<bool> seen(n_, false);
                std::size_t cells = 0;
                for (auto c : colour)
                    if (! seen[c]) {
                        seen[c] = true;
                        ++cells;
                    }
                return cells;
            }

            void refine(std::vector<Vertex> & colour) const
            {
                const unsigned r = h_.uniformity();
                std::size_t cells = cell_count(colour);
                std::vector<std::vector<Vertex>> key(n_);
                std::vector<Vertex> order(n_);
                std::vector<Vertex> tuple;
                while (cells < n_) {
                    for (Vertex v = 0; v < n_; ++v) {
                        std::vector<std::vector<Vertex>> tuples;
                        tuples.reserve(incident_[v].size());
                        for (auto ei : incident_[v]) {
                            tuple.clear();
                            for (auto x : h_.edge(ei))
                                if (x != v)
                                    tuple.push_back(colour[x]);
                            std::sort(tuple.begin(), tuple.end());
                            tuples.push_back(tuple);
                        }
                        std::sort(tuples.begin(), tuples.end());
                        auto & k = key[v];
                        k.assign(1, colour[v]);
                        k.reserve(1 + tuples.size() * (r - 1));
                        for (const auto & t : tuples)
                            k.insert(k.end(), t.begin(), t.end());
                    }
                    std::iota(order.begin(), order.end(), 0);
                    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
                    std::size_t fresh_cells = 0;
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (i == 0 || key[order[i]] != key[order[i - 1]]) {
                            ++fresh_cells;
                            colour[order[i]] = Vertex(i);
                        } else {
                            colour[order[i]] = colour[order[i - 1]];
                        }
                    }
                    if (fresh_cells == cells)
                        return;
                    cells = fresh_cells;
                }
            }

            /// Union of the orbits of the stored automorphisms fixing `prefix` pointwise.
            auto orbits(const std::vector<Vertex> & prefix) const -> std::vector<Vertex>
            {
                std::vector<Vertex> parent(n_);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](Vertex x) {
                    while (parent[x] != x)
                        x = parent[x] = parent[parent[x]];
                    return x;
                };
                for (const auto & g : generators_) {
                    if (! std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return g[p] == p; }))
                        continue;
                    for (Vertex x = 0; x < n_; ++x) {
                        auto a = find(x), b = find(g[x]);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }
                }
                for (Vertex x = 0; x < n_; ++x)
                    parent[x] = find(x);
                return parent;
            }

            void leaf(const std::vector<Vertex> & colour)
            {
                auto flat = relabel(h_, colour).flat();
                if (best_label_.empty() || flat < best_flat_) {
                    best_flat_ = std::move(flat);
                    best_label_ = colour;
                    best_inverse_.assign(n_, 0);
                    for (Vertex v = 0; v < n_; ++v)
                        best_inverse_[colour[v]] = v;
                    return;
                }
                if (flat != best_flat_)
                    return;
                std::vector<Vertex> g(n_);
                bool identity = true;
                for (Vertex v = 0; v < n_; ++v) {
                    g[v] = best_inverse_[colour[v]];
                    identity = identity && g[v] == v;
                }
                if (! identity)
                    generators_.push_back(std::move(g));
            }

            void search(std::vector<Vertex> colour, std::vector<Vertex> & prefix)
            {
                refine(colour);
                std::vector<std::size_t> size(n_, 0);
                for (auto c : colour)
                    ++size[c];
                std::size_t target = n_;
                for (std::size_t c = 0; c < n_; ++c)
                    if (size[c] > 1) {
                        target = c;
                        break;
                    }
                if (target == n_) {
                    leaf(colour);
                    return;
                }
                std::vector<Vertex> cell;
                for (Vertex v = 0; v < n_; ++v)
                    if (colour[v] == target)
                        cell.push_back(v);
                std::vector<Vertex> tried;
                for (auto v : cell) {
                    if (! tried.empty()) {
                        auto orbit = orbits(prefix);
                        if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbit[t] == orbit[v]; }))
                            continue;
                    }
                    auto child = colour;
                    for (auto u : cell)
                        if (u != v)
                            child[u] = Vertex(target + 1);
                    prefix.push_back(v);
                    search(std::move(child), prefix);
                    prefix.pop_back();
                    tried.push_back(v);
                }
            }

            const Hypergraph & h_;
            std::size_t n_;
            std::vector<std::vector<std::size_t>> incident_;
            std::vector<std::vector<Vertex>> generators_;
            std::vector<Vertex> best_flat_;
            std::vector<Vertex> best_label_;
            std::vector<Vertex> best_inverse_;
        };

        auto seconds_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    }

    auto canonical_labeling(const Hypergraph & h) -> std::vector<Vertex>
    {
        if (h.order() == 0)
            return {};
        return Canonizer(h).run();
    }

    auto canonical_form(const Hypergraph & h) -> Hypergraph
    {
        return relabel(h, canonical_labeling(h));
    }

    auto are_isomorphic(const Hypergraph & a, const Hypergraph & b) -> bool
    {
        if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size())
            return false;
        return canonical_form(a) == canonical_form(b);
    }

    auto generation_cap(unsigned r) -> std::size_t
    {
        return r <= 2 ? 10 : r == 3 ? 8 : 7;
    }

    auto generate_free(std::size_t n, unsigned r, const ForbiddenFamily & family, const HostVisitor & visit,
            const GenerationOptions & options) -> GenerationStats
    {
        if (r < 2)
            throw ArityError("generate_free needs r >= 2");
        if (auto fr = family.uniformity(); fr && *fr != r)
            throw ArityError("family is " + std::to_string(*fr) + "-uniform, generation asked for r = " + std::to_string(r));
        if (n > generation_cap(r) && ! options.override_cap)
            throw CapExceededError("generation on " + std::to_string(n) + " vertices exceeds the cap of " +
                    std::to_string(generation_cap(r)) + " for r = " + std::to_string(r) + "; pass the override flag to run it");

        std::vector<std::vector<Vertex>> slots;
        for_each_subset(n, r, [&](std::span<const std::size_t> pick) { slots.emplace_back(pick.begin(), pick.end()); });

        const auto * list = std::get_if<ForbiddenFamily::ExplicitList>(&family.variant());
        auto still_free = [&](const Hypergraph & g, std::span<const Vertex> e) {
            if (! list)
                return is_free(family, g);
            return std::none_of(list->patterns.begin(), list->patterns.end(),
                    [&](const Pattern & p) { return contains_subgraph_through(p, g, e); });
        };

        GenerationStats stats;
        std::vector<Hypergraph> level{Hypergraph(r, n)};
        if (! is_free(family, level.front()))
            return stats;
        while (! level.empty()) {
            for (const auto & g : level) {
                visit(g);
                ++stats.visited;
            }
            std::vector<std::vector<Hypergraph>> children(level.size());
            parallel_for(level.size(), [&](std::size_t i) {
                const auto & g = level[i];
                for (const auto & e : slots) {
                    if (g.contains_edge(e))
                        continue;
                    auto flat = g.flat();
                    flat.insert(flat.end(), e.begin(), e.end());
                    auto child = Hypergraph::from_flat(r, n, std::move(flat));
                    if (still_free(child, e))
                        children[i].push_back(canonical_form(child));
                }
            });
            std::vector<Hypergraph> next;
            for (auto & c : children) {
                stats.nodes += c.size();
                std::move(c.begin(), c.end(), std::back_inserter(next));
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            level = std::move(next);
        }
        return stats;
    }

    auto brute_force_extremal(std::size_t n, const Pattern & q, const ForbiddenFamily & family, const SearchOptions & options)
        -> SearchReport
    {
        const auto start = std::chrono::steady_clock::now();
        SearchReport report{n,
                options.pattern_id.empty()
                        ? "Q(v=" + std::to_string(q.order()) + ",e=" + std::to_string(q.graph().size()) + ")"
                        : options.pattern_id,
                family.describe(), 0, 0, {}, 0.0, 0};
        auto stats = generate_free(n, q.uniformity(), family, [&](const Hypergraph & h) {
            auto value = count_inj(q, h);
            if (report.witness_count == 0 || value > report.extremal_value) {
                report.extremal_value = value;
                report.witness_count = 0;
                report.witnesses.clear();
            }
            if (value == report.extremal_value) {
                ++report.witness_count;
                if (report.witnesses.size() < options.max_witnesses)
                    report.witnesses.push_back(h);
            }
        }, options.generation);
        for (const auto & w : report.witnesses)
            if (! is_free(family, w) || count_inj(q, w) != report.extremal_value)
                throw Error("brute_force_extremal: a witness failed re-verification");
        report.nodes_explored = stats.nodes;
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    auto pentagon_formula(std::size_t n) -> Count
    {
        Count out = 10;
        for (std::size_t i = 0; i < 5; ++i)
            out *= Count((n + i) / 5);
        return out;
    }

    auto verify_pentagon(const std::vector<std::size_t> & ns, const PentagonOptions & options) -> std::vector<PentagonRow>
    {
        const auto c5 = cycle_graph(5);
        const Pattern q(c5);
        const auto k3 = ForbiddenFamily::list({Pattern(complete_graph(3))});
        std::vector<PentagonRow> rows;
        for (auto n : ns) {
            PentagonRow row{n, pentagon_formula(n), std::nullopt, optimize_part_sizes(q, c5, n).best_count, false};
            if (options.brute && n <= options.brute_max && (n <= generation_cap(2) || options.generation.override_cap)) {
                SearchOptions search{options.generation, 1, "C5"};
                row.brute_value = brute_force_extremal(n, q, k3, search).extremal_value;
            }
            row.match = row.construction_value == row.formula_value &&
                    (! row.brute_value || *row.brute_value == row.formula_value);
            rows.push_back(row);
        }
        return rows;
    }

    auto degree_stability_probe(const Pattern & q, const ForbiddenFamily & family, const Membership & membership,
            double eps, std::size_t n, ProbeMode mode, const ProbeOptions & options) -> ProbeReport
    {
        if (n == 0)
            throw Error("degree_stability_probe: n must be positive");
        ProbeReport report{n, 0, 0.0, 0, {}, {}};
        const long double k = static_cast<long double>(q.order());

        struct Scanned
        {
            Hypergraph host;
            Count value;
        };
        std::vector<Scanned> hosts;
        if (mode == ProbeMode::Exhaustive) {
            generate_free(n, q.uniformity(), family, [&](const Hypergraph & h) {
                hosts.push_back({h, count_inj(q, h)});
            }, options.generation);
            Count best = 0;
            for (const auto & s : hosts)
                best = std::max(best, s.value);
            report.extremal_value = options.extremal_value.value_or(best);
        } else {
            auto list = options.hosts;
            if (list.empty() || ! options.extremal_value) {
                auto search = brute_force_extremal(n, q, family, {options.generation, 1024, {}});
                report.extremal_value = search.extremal_value;
                if (list.empty())
                    list = search.witnesses;
            }
            if (options.extremal_value)
                report.extremal_value = *options.extremal_value;
            for (auto & h : list) {
                if (! is_free(family, h))
                    continue;
                auto value = count_inj(q, h);
                hosts.push_back({std::move(h), value});
            }
        }

        const long double threshold =
                (1.0L - eps) * k * static_cast<long double>(report.extremal_value) / static_cast<long double>(n);
        report.threshold = static_cast<double>(threshold);
        report.scanned = hosts.size();
        for (auto & s : hosts) {
            // The minimum Q-degree is at most the average v(Q) * inj / n.
            if (k * static_cast<long double>(s.value) / static_cast<long double>(n) < threshold)
                continue;
            auto min_degree = q_degree_stats(q, s.host).min;
            if (static_cast<long double>(min_degree) < threshold)
                continue;
            bool member = membership.contains(s.host);
            if (! member)
                report.counterexamples.push_back(s.host);
            report.qualifiers.push_back({std::move(s.host), min_degree, member});
        }
        return report;
    }
}
