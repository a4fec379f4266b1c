#pragma once

#include <xh/types.hpp>

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

namespace xh
{
    using VertexSet = std::vector<Vertex>;
    using EdgeList = std::vector<VertexSet>;

    /// An r-uniform hypergraph on the vertices 0..n-1.
    ///
    /// Edges are kept sorted ascending inside, deduplicated and in lexicographic
    /// order, packed into one flat array of length r * |H|. Two hypergraphs are
    /// structurally equal exactly when (r, n, edges) compare equal. Values are
    /// immutable once built; every operation returns a new hypergraph.
    class Hypergraph
    {
    public:
        class EdgeIterator
        {
        public:
            using iterator_category = std::random_access_iterator_tag;
            using value_type = std::span<const Vertex>;
            using difference_type = std::ptrdiff_t;
            using reference = value_type;
            using pointer = void;

            EdgeIterator() = default;
            EdgeIterator(const Vertex * at, std::size_t r) : at_(at), r_(r) {}

            auto operator*() const -> value_type { return {at_, r_}; }
            auto operator[](difference_type k) const -> value_type { return {at_ + k * difference_type(r_), r_}; }
            auto operator++() -> EdgeIterator & { at_ += r_; return *this; }
            auto operator++(int) -> EdgeIterator { auto t = *this; ++*this; return t; }
            auto operator--() -> EdgeIterator & { at_ -= r_; return *this; }
            auto operator--(int) -> EdgeIterator { auto t = *this; --*this; return t; }
            auto operator+=(difference_type k) -> EdgeIterator & { at_ += k * difference_type(r_); return *this; }
            auto operator-=(difference_type k) -> EdgeIterator & { at_ -= k * difference_type(r_); return *this; }
            friend auto operator+(EdgeIterator it, difference_type k) -> EdgeIterator { return it += k; }
            friend auto operator+(difference_type k, EdgeIterator it) -> EdgeIterator { return it += k; }
            friend auto operator-(EdgeIterator it, difference_type k) -> EdgeIterator { return it -= k; }
            friend auto operator-(const EdgeIterator & a, const EdgeIterator & b) -> difference_type
            {
                return a.r_ == 0 ? 0 : (a.at_ - b.at_) / difference_type(a.r_);
            }
            auto operator==(const EdgeIterator & o) const -> bool { return at_ == o.at_; }
            auto operator<=>(const EdgeIterator & o) const -> std::strong_ordering { return at_ <=> o.at_; }

        private:
            const Vertex * at_ = nullptr;
            std::size_t r_ = 0;
        };

        struct EdgeRange
        {
            EdgeIterator first, last;
            auto begin() const -> EdgeIterator { return first; }
            auto end() const -> EdgeIterator { return last; }
            auto size() const -> std::size_t { return static_cast<std::size_t>(last - first); }
            auto operator[](std::size_t i) const -> std::span<const Vertex> { return first[std::ptrdiff_t(i)]; }
        };

        /// Empty r-graph on n vertices.
        Hypergraph(unsigned r, std::size_t n);

        /// Builds from raw edges, sorting and deduplicating. Throws
        /// ConstructionError naming the offending edge index on a repeated
        /// vertex, an out-of-range vertex, or the wrong arity.
        Hypergraph(unsigned r, std::size_t n, const EdgeList & raw_edges);

        /// Same as above from a flat buffer of r * k vertex ids.
        static auto from_flat(unsigned r, std::size_t n, std::vector<Vertex> flat) -> Hypergraph;

        auto uniformity() const -> unsigned { return r_; }
        auto order() const -> std::size_t { return n_; }
        auto size() const -> std::size_t { return r_ == 0 ? 0 : flat_.size() / r_; }
        auto empty() const -> bool { return flat_.empty(); }

        auto edge(std::size_t i) const -> std::span<const Vertex> { return {flat_.data() + i * r_, r_}; }
        auto edges() const -> EdgeRange
        {
            return {EdgeIterator{flat_.data(), r_}, EdgeIterator{flat_.data() + flat_.size(), r_}};
        }
        auto flat() const -> const std::vector<Vertex> & { return flat_; }
        auto edge_list() const -> EdgeList;

        /// Binary search; `sorted_edge` must be ascending.
        auto contains_edge(std::span<const Vertex> sorted_edge) const -> bool;

        /// Number of edges through v.
        auto degree(Vertex v) const -> std::size_t;

        auto operator==(const Hypergraph &) const -> bool = default;
        auto operator<=>(const Hypergraph &) const -> std::strong_ordering = default;

    private:
        struct Trusted {};
        Hypergraph(Trusted, unsigned r, std::size_t n, std::vector<Vertex> flat);

        unsigned r_;
        std::size_t n_;
        std::vector<Vertex> flat_;
    };

    /// Ordered list of disjoint parts covering 0..n-1. Empty parts are allowed.
    struct VertexPartition
    {
        std::size_t n = 0;
        std::vector<VertexSet> parts;

        /// Throws Error unless the parts are disjoint, cover 0..n-1 and there is at least one part.
        void validate() const;
        /// part_of[v] = index of the part containing v.
        auto part_of() const -> std::vector<std::size_t>;
        auto sizes() const -> std::vector<std::size_t>;
    };

    auto make_hypergraph(unsigned r, std::size_t n, const EdgeList & raw_edges) -> Hypergraph;

    /// L_H(T): all (r - |T|)-sets e disjoint from T with T + e an edge.
    auto link(const Hypergraph & h, const VertexSet & t) -> EdgeList;
    /// |L_H(T)|.
    auto degree(const Hypergraph & h, const VertexSet & t) -> std::size_t;

    /// All i-subsets lying in some edge, as an i-graph on the same vertex set.
    auto shadow(const Hypergraph & h, unsigned i) -> Hypergraph;

    /// H[S] relabelled to 0..|S|-1, keeping the ascending order of survivors.
    auto induced(const Hypergraph & h, const VertexSet & s) -> Hypergraph;
    auto remove_vertex(const Hypergraph & h, Vertex v) -> Hypergraph;

    /// Every u sharing an edge with v.
    auto neighborhood(const Hypergraph & h, Vertex v) -> VertexSet;
    /// { u : d_H(uv) >= k * r * C(n, r - 3) }. For r = 2 the threshold is vacuous
    /// and this is the plain neighborhood.
    auto cover_neighborhood(const Hypergraph & h, Vertex v, double k) -> VertexSet;

    struct Blowup
    {
        Hypergraph graph;
        VertexPartition partition;
    };

    /// G(V_1, ..., V_m): vertex i becomes a part of sizes[i] vertices, numbered
    /// consecutively; each edge becomes all its transversal r-sets.
    auto blowup(const Hypergraph & g, std::span<const std::size_t> sizes) -> Blowup;

    /// K^r(V_1, ..., V_l): every r-set meeting each part at most once.
    auto complete_multipartite(unsigned r, std::span<const std::size_t> part_sizes) -> Hypergraph;
    /// Balanced part sizes for n vertices into l parts, larger parts first.
    auto balanced_parts(std::size_t n, std::size_t l) -> std::vector<std::size_t>;
    /// T^r(n, l).
    auto turan(std::size_t n, std::size_t l, unsigned r) -> Hypergraph;

    /// H_F^r: each edge of the graph f gets target_r - 2 private fresh vertices.
    auto expansion(const Hypergraph & f, unsigned target_r) -> Hypergraph;

    auto is_2_covered(const Hypergraph & g) -> bool;

    auto uncovered_pair(const Hypergraph & h, Vertex u, Vertex v) -> bool;
    /// L_H(u) == L_H(v).
    auto equivalent_pair(const Hypergraph & h, Vertex u, Vertex v) -> bool;
    /// H_{u->v}: drop every edge through u, then add u + e for every e in L_H(v).
    /// Throws Error when {u, v} is covered.
    auto symmetrize_move(const Hypergraph & h, Vertex u, Vertex v) -> Hypergraph;

    // Small named constructions used all over the tests and the CLI.
    auto complete_graph(std::size_t n, unsigned r = 2) -> Hypergraph;
    auto cycle_graph(std::size_t n) -> Hypergraph;
    auto path_graph(std::size_t n) -> Hypergraph;
    auto star_graph(std::size_t leaves) -> Hypergraph;

    /// Copy of h with the vertex ids permuted: vertex v becomes perm[v].
    auto relabel(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph;
    /// Same vertex set with the given edges added (duplicates collapse).
    auto add_edges(const Hypergraph & h, const EdgeList & extra) -> Hypergraph;
    /// Disjoint isolated vertices appended.
    auto add_isolated(const Hypergraph & h, std::size_t count) -> Hypergraph;
}
