#include <xh/hypergraph.hpp>
#include "combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace xh
{
    namespace
    {
        auto less_edge(std::span<const Vertex> a, std::span<const Vertex> b) -> bool
        {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }

        // Sorts edges of a flat buffer lexicographically and drops duplicates.
        // Each edge must already be internally sorted.
        auto canonical_edge_order(unsigned r, std::vector<Vertex> flat) -> std::vector<Vertex>
        {
            if (r == 0 || flat.empty())
                return flat;
            const std::size_t m = flat.size() / r;
            std::vector<std::size_t> idx(m);
            std::iota(idx.begin(), idx.end(), 0);
            auto at = [&](std::size_t i) { return std::span<const Vertex>{flat.data() + i * r, r}; };
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less_edge(at(a), at(b)); });
            std::vector<Vertex> out;
            out.reserve(flat.size());
            for (std::size_t k = 0; k < m; ++k) {
                auto e = at(idx[k]);
                if (k > 0 && std::equal(e.begin(), e.end(), at(idx[k - 1]).begin()))
                    continue;
                out.insert(out.end(), e.begin(), e.end());
            }
            return out;
        }
    }

    Hypergraph::Hypergraph(unsigned r, std::size_t n) :
        r_(r), n_(n)
    {
        if (r < 1)
            throw ArityError("uniformity must be at least 1");
    }

    Hypergraph::Hypergraph(Trusted, unsigned r, std::size_t n, std::vector<Vertex> flat) :
        r_(r), n_(n), flat_(std::move(flat))
    {
    }

    Hypergraph::Hypergraph(unsigned r, std::size_t n, const EdgeList & raw_edges) :
        Hypergraph(r, n)
    {
        std::vector<Vertex> flat;
        flat.reserve(raw_edges.size() * r);
        for (std::size_t i = 0; i < raw_edges.size(); ++i) {
            const auto & e = raw_edges[i];
            if (e.size() != r)
                throw ConstructionError("edge " + std::to_string(i) + ": wrong arity (expected " + std::to_string(r) +
                        ", got " + std::to_string(e.size()) + ")", i);
            flat.insert(flat.end(), e.begin(), e.end());
        }
        *this = from_flat(r, n, std::move(flat));
    }

    auto Hypergraph::from_flat(unsigned r, std::size_t n, std::vector<Vertex> flat) -> Hypergraph
    {
        if (r < 1)
            throw ArityError("uniformity must be at least 1");
        if (flat.size() % r != 0)
            throw ConstructionError("flat edge buffer length is not a multiple of r", flat.size() / r);
        for (std::size_t i = 0; i < flat.size() / r; ++i) {
            auto first = flat.begin() + std::ptrdiff_t(i * r), last = first + r;
            for (auto it = first; it != last; ++it)
                if (*it >= n)
                    throw ConstructionError("edge " + std::to_string(i) + ": vertex " + std::to_string(*it) +
                            " out of range (n = " + std::to_string(n) + ")", i);
            std::sort(first, last);
            if (std::adjacent_find(first, last) != last)
                throw ConstructionError("edge " + std::to_string(i) + ": repeated vertex", i);
        }
        return Hypergraph(Trusted{}, r, n, canonical_edge_order(r, std::move(flat)));
    }

    auto Hypergraph::edge_list() const -> EdgeList
    {
        EdgeList out;
        out.reserve(size());
        for (auto e : edges())
            out.emplace_back(e.begin(), e.end());
        return out;
    }

    auto Hypergraph::contains_edge(std::span<const Vertex> sorted_edge) const -> bool
    {
        if (sorted_edge.size() != r_)
            return false;
        auto range = edges();
        auto it = std::lower_bound(range.begin(), range.end(), sorted_edge, less_edge);
        return it != range.end() && std::equal(sorted_edge.begin(), sorted_edge.end(), (*it).begin());
    }

    auto Hypergraph::degree(Vertex v) const -> std::size_t
    {
        return static_cast<std::size_t>(std::count(flat_.begin(), flat_.end(), v));
    }

    void VertexPartition::validate() const
    {
        if (parts.empty())
            throw Error("partition needs at least one part");
        std::vector<bool> seen(n, false);
        std::size_t total = 0;
        for (const auto & p : parts)
            for (auto v : p) {
                if (v >= n)
                    throw Error("partition vertex " + std::to_string(v) + " out of range");
                if (seen[v])
                    throw Error("partition parts are not disjoint at vertex " + std::to_string(v));
                seen[v] = true;
                ++total;
            }
        if (total != n)
            throw Error("partition does not cover every vertex");
    }

    auto VertexPartition::part_of() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out(n, parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto v : parts[i])
                out[v] = i;
        return out;
    }

    auto VertexPartition::sizes() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (const auto & p : parts)
            out.push_back(p.size());
        return out;
    }

    auto make_hypergraph(unsigned r, std::size_t n, const EdgeList & raw_edges) -> Hypergraph
    {
        if (r < 2)
            throw ArityError("make_hypergraph: uniformity must be at least 2");
        return Hypergraph(r, n, raw_edges);
    }

    auto link(const Hypergraph & h, const VertexSet & t) -> EdgeList
    {
        if (t.empty() || t.size() >= h.uniformity())
            throw ArityError("link: |T| must lie in 1..r-1, got " + std::to_string(t.size()));
        VertexSet sorted_t = t;
        std::sort(sorted_t.begin(), sorted_t.end());
        if (std::adjacent_find(sorted_t.begin(), sorted_t.end()) != sorted_t.end())
            throw ArityError("link: T has repeated vertices");
        EdgeList out;
        for (auto e : h.edges()) {
            if (! std::includes(e.begin(), e.end(), sorted_t.begin(), sorted_t.end()))
                continue;
            VertexSet rest;
            std::set_difference(e.begin(), e.end(), sorted_t.begin(), sorted_t.end(), std::back_inserter(rest));
            out.push_back(std::move(rest));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    auto degree(const Hypergraph & h, const VertexSet & t) -> std::size_t
    {
        return link(h, t).size();
    }

    auto shadow(const Hypergraph & h, unsigned i) -> Hypergraph
    {
        if (i < 1 || i >= h.uniformity())
            throw ArityError("shadow: level must lie in 1..r-1");
        std::vector<Vertex> flat;
        std::vector<Vertex> sub(i);
        for (auto e : h.edges())
            for_each_subset(e.size(), i, [&](std::span<const std::size_t> pick) {
                for (std::size_t k = 0; k < i; ++k)
                    sub[k] = e[pick[k]];
                flat.insert(flat.end(), sub.begin(), sub.end());
            });
        return Hypergraph::from_flat(i, h.order(), std::move(flat));
    }

    auto induced(const Hypergraph & h, const VertexSet & s) -> Hypergraph
    {
        constexpr Vertex absent = ~Vertex{0};
        std::vector<Vertex> map(h.order(), absent);
        VertexSet sorted_s = s;
        std::sort(sorted_s.begin(), sorted_s.end());
        sorted_s.erase(std::unique(sorted_s.begin(), sorted_s.end()), sorted_s.end());
        for (std::size_t k = 0; k < sorted_s.size(); ++k) {
            if (sorted_s[k] >= h.order())
                throw Error("induced: vertex " + std::to_string(sorted_s[k]) + " out of range");
            map[sorted_s[k]] = Vertex(k);
        }
        std::vector<Vertex> flat;
        for (auto e : h.edges()) {
            if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return map[v] == absent; }))
                continue;
            for (auto v : e)
                flat.push_back(map[v]);
        }
        return Hypergraph::from_flat(h.uniformity(), sorted_s.size(), std::move(flat));
    }

    auto remove_vertex(const Hypergraph & h, Vertex v) -> Hypergraph
    {
        VertexSet keep;
        for (Vertex u = 0; u < h.order(); ++u)
            if (u != v)
                keep.push_back(u);
        return induced(h, keep);
    }

    auto neighborhood(const Hypergraph & h, Vertex v) -> VertexSet
    {
        std::vector<bool> mark(h.order(), false);
        for (auto e : h.edges())
            if (std::binary_search(e.begin(), e.end(), v))
                for (auto u : e)
                    mark[u] = true;
        VertexSet out;
        for (Vertex u = 0; u < h.order(); ++u)
            if (mark[u] && u != v)
                out.push_back(u);
        return out;
    }

    auto cover_neighborhood(const Hypergraph & h, Vertex v, double k) -> VertexSet
    {
        const unsigned r = h.uniformity();
        if (r <= 2)
            return neighborhood(h, v);
        const double threshold = k * double(r) * binomial_real(double(h.order()), r - 3);
        std::vector<std::size_t> codegree(h.order(), 0);
        for (auto e : h.edges())
            if (std::binary_search(e.begin(), e.end(), v))
                for (auto u : e)
                    if (u != v)
                        ++codegree[u];
        VertexSet out;
        for (Vertex u = 0; u < h.order(); ++u)
            if (u != v && codegree[u] > 0 && double(codegree[u]) >= threshold)
                out.push_back(u);
        return out;
    }

    auto blowup(const Hypergraph & g, std::span<const std::size_t> sizes) -> Blowup
    {
        if (sizes.size() != g.order())
            throw ArityError("blowup: need one part size per vertex");
        std::vector<std::size_t> offset(sizes.size() + 1, 0);
        std::partial_sum(sizes.begin(), sizes.end(), offset.begin() + 1);
        const std::size_t n = offset.back();
        const unsigned r = g.uniformity();

        std::vector<Vertex> flat;
        std::vector<std::size_t> choice(r);
        for (auto e : g.edges()) {
            if (std::any_of(e.begin(), e.end(), [&](Vertex i) { return sizes[i] == 0; }))
                continue;
            std::fill(choice.begin(), choice.end(), 0);
            while (true) {
                for (unsigned k = 0; k < r; ++k)
                    flat.push_back(Vertex(offset[e[k]] + choice[k]));
                int k = int(r) - 1;
                while (k >= 0 && ++choice[std::size_t(k)] == sizes[e[std::size_t(k)]])
                    choice[std::size_t(k--)] = 0;
                if (k < 0)
                    break;
            }
        }

        VertexPartition partition{n, {}};
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            VertexSet part(sizes[i]);
            std::iota(part.begin(), part.end(), Vertex(offset[i]));
            partition.parts.push_back(std::move(part));
        }
        return {Hypergraph::from_flat(r, n, std::move(flat)), std::move(partition)};
    }

    auto complete_multipartite(unsigned r, std::span<const std::size_t> part_sizes) -> Hypergraph
    {
        const std::size_t l = part_sizes.size();
        if (l < r) {
            std::size_t n = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
            return Hypergraph(r, n);
        }
        return blowup(complete_graph(l, r), part_sizes).graph;
    }

    auto balanced_parts(std::size_t n, std::size_t l) -> std::vector<std::size_t>
    {
        if (l == 0)
            throw Error("balanced_parts: need at least one part");
        std::vector<std::size_t> out(l, n / l);
        for (std::size_t i = 0; i < n % l; ++i)
            ++out[i];
        return out;
    }

    auto turan(std::size_t n, std::size_t l, unsigned r) -> Hypergraph
    {
        auto parts = balanced_parts(n, l);
        return complete_multipartite(r, parts);
    }

    auto expansion(const Hypergraph & f, unsigned target_r) -> Hypergraph
    {
        if (f.uniformity() != 2)
            throw ArityError("expansion: base must be a graph");
        if (target_r < 2)
            throw ArityError("expansion: target uniformity must be at least 2");
        const std::size_t extra = target_r - 2;
        const std::size_t n = f.order() + extra * f.size();
        std::vector<Vertex> flat;
        Vertex next = Vertex(f.order());
        for (auto e : f.edges()) {
            flat.push_back(e[0]);
            flat.push_back(e[1]);
            for (std::size_t k = 0; k < extra; ++k)
                flat.push_back(next++);
        }
        return Hypergraph::from_flat(target_r, n, std::move(flat));
    }

    auto is_2_covered(const Hypergraph & g) -> bool
    {
        const std::size_t n = g.order();
        std::vector<bool> covered(n * n, false);
        for (auto e : g.edges())
            for (auto a : e)
                for (auto b : e)
                    covered[a * n + b] = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (! covered[a * n + b])
                    return false;
        return true;
    }

    auto uncovered_pair(const Hypergraph & h, Vertex u, Vertex v) -> bool
    {
        for (auto e : h.edges())
            if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v))
                return false;
        return true;
    }

    auto equivalent_pair(const Hypergraph & h, Vertex u, Vertex v) -> bool
    {
        if (u == v)
            return true;
        if (h.uniformity() == 1)
            return h.degree(u) == h.degree(v);
        return link(h, {u}) == link(h, {v});
    }

    auto symmetrize_move(const Hypergraph & h, Vertex u, Vertex v) -> Hypergraph
    {
        if (u == v)
            throw Error("symmetrize_move: u and v must differ");
        if (u >= h.order() || v >= h.order())
            throw Error("symmetrize_move: vertex out of range");
        if (! uncovered_pair(h, u, v))
            throw Error("symmetrize_move: pair {" + std::to_string(u) + "," + std::to_string(v) + "} is covered");
        const unsigned r = h.uniformity();
        std::vector<Vertex> flat;
        flat.reserve(h.flat().size());
        for (auto e : h.edges()) {
            if (std::binary_search(e.begin(), e.end(), u))
                continue;
            flat.insert(flat.end(), e.begin(), e.end());
            if (std::binary_search(e.begin(), e.end(), v))
                for (unsigned k = 0; k < r; ++k)
                    flat.push_back(e[k] == v ? u : e[k]);
        }
        return Hypergraph::from_flat(r, h.order(), std::move(flat));
    }

    auto complete_graph(std::size_t n, unsigned r) -> Hypergraph
    {
        std::vector<Vertex> flat;
        for_each_subset(n, r, [&](std::span<const std::size_t> pick) {
            for (auto p : pick)
                flat.push_back(Vertex(p));
        });
        return Hypergraph::from_flat(r, n, std::move(flat));
    }

    auto cycle_graph(std::size_t n) -> Hypergraph
    {
        EdgeList edges;
        for (std::size_t i = 0; i < n; ++i)
            edges.push_back({Vertex(i), Vertex((i + 1) % n)});
        return Hypergraph(2, n, edges);
    }

    auto path_graph(std::size_t n) -> Hypergraph
    {
        EdgeList edges;
        for (std::size_t i = 0; i + 1 < n; ++i)
            edges.push_back({Vertex(i), Vertex(i + 1)});
        return Hypergraph(2, n, edges);
    }

    auto star_graph(std::size_t leaves) -> Hypergraph
    {
        EdgeList edges;
        for (std::size_t i = 1; i <= leaves; ++i)
            edges.push_back({0, Vertex(i)});
        return Hypergraph(2, leaves + 1, edges);
    }

    auto relabel(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph
    {
        std::vector<Vertex> flat;
        flat.reserve(h.flat().size());
        for (auto v : h.flat())
            flat.push_back(perm[v]);
        return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
    }

    auto add_edges(const Hypergraph & h, const EdgeList & extra) -> Hypergraph
    {
        auto flat = h.flat();
        for (const auto & e : extra) {
            if (e.size() != h.uniformity())
                throw ArityError("add_edges: wrong arity");
            flat.insert(flat.end(), e.begin(), e.end());
        }
        return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
    }

    auto add_isolated(const Hypergraph & h, std::size_t count) -> Hypergraph
    {
        return Hypergraph::from_flat(h.uniformity(), h.order() + count, h.flat());
    }
}
