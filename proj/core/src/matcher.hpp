#pragma once

// Backtracking engine behind every hom / inj computation.

#include <xh/hypergraph.hpp>
#include "bitset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace xh::detail
{
    /// Host-side lookup structures: 2-shadow adjacency and fast edge membership.
    class HostIndex
    {
    public:
        explicit HostIndex(const Hypergraph & h);

        auto order() const -> std::size_t { return n_; }
        auto uniformity() const -> unsigned { return r_; }
        auto adjacency(Vertex v) const -> const Bitset & { return adj_[v]; }
        auto degree(Vertex v) const -> std::size_t { return degree_[v]; }
        /// Membership of an r-set given in any order (must be distinct vertices).
        auto has_edge(std::span<const Vertex> vertices) const -> bool;

    private:
        auto pack(std::span<const Vertex> sorted) const -> std::uint64_t;

        const Hypergraph * graph_;
        std::size_t n_;
        unsigned r_;
        std::vector<Bitset> adj_;
        std::vector<std::size_t> degree_;
        unsigned bits_ = 0;
        bool packed_ = false;
        std::unordered_set<std::uint64_t> keys_;
    };

    /// Static search order for a pattern with the precomputed checks per depth.
    struct PatternPlan
    {
        std::size_t n = 0;
        unsigned r = 0;
        std::vector<Vertex> order;
        std::vector<std::size_t> position;
        /// Earlier positions that are 2-shadow neighbors of position k.
        std::vector<std::vector<std::size_t>> back_neighbors;
        /// Pattern edges (as positions) whose last vertex in the order is position k.
        std::vector<std::vector<std::vector<std::size_t>>> completing;
        std::vector<std::size_t> degree;

        /// `prefix` vertices come first in the given order, the rest by maximum
        /// adjacency to what is already ordered (ties: higher degree, lower id).
        PatternPlan(const Hypergraph & q, std::span<const Vertex> prefix = {});
    };

    struct SearchOptions
    {
        bool injective = true;
        /// Optional candidate restriction per pattern vertex.
        std::vector<std::optional<Bitset>> domains;
    };

    /// Depth-first matcher. `visit(map)` receives map[pattern vertex] = host
    /// vertex and returns false to stop the search.
    class Matcher
    {
    public:
        Matcher(const PatternPlan & plan, const HostIndex & host, SearchOptions options);

        /// Candidates for the first position (after domain filtering).
        auto first_candidates() const -> std::vector<Vertex>;

        template <typename Visit>
        auto run(Visit && visit) -> bool
        {
            if (plan_.n == 0)
                return visit(std::span<const Vertex>{map_});
            return descend(0, visit);
        }

        /// Same, with position 0 pinned to `first`.
        template <typename Visit>
        auto run_from(Vertex first, Visit && visit) -> bool
        {
            if (! admissible(0, first))
                return true;
            assign(0, first);
            bool go = true;
            if (edges_ok(0))
                go = plan_.n == 1 ? visit(std::span<const Vertex>{map_}) : descend(1, visit);
            unassign(0, first);
            return go;
        }

        /// Count all completions; cheaper than visiting when r <= 2.
        auto count() -> Count;
        auto count_from(Vertex first) -> Count;

    private:
        auto candidates(std::size_t k) const -> Bitset;
        auto admissible(std::size_t k, Vertex v) const -> bool;
        auto edges_ok(std::size_t k) -> bool;
        void assign(std::size_t k, Vertex v);
        void unassign(std::size_t k, Vertex v);
        auto count_at(std::size_t k) -> Count;

        template <typename Visit>
        auto descend(std::size_t k, Visit & visit) -> bool
        {
            auto cand = candidates(k);
            return cand.for_each_until([&](std::size_t c) {
                Vertex v = Vertex(c);
                assign(k, v);
                bool go = true;
                if (edges_ok(k))
                    go = (k + 1 == plan_.n) ? visit(std::span<const Vertex>{map_}) : descend(k + 1, visit);
                unassign(k, v);
                return go;
            });
        }

        const PatternPlan & plan_;
        const HostIndex & host_;
        SearchOptions options_;
        std::vector<Vertex> map_;
        std::vector<Vertex> image_;
        Bitset used_;
        std::vector<Vertex> scratch_;
    };
}
