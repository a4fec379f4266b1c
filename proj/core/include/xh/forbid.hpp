#pragma once

#include <xh/homcount.hpp>
#include <xh/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace xh
{
    /// Node budget for the exponential containment searches. Reads
    /// XH_NODE_BUDGET from the environment, defaulting to 10^8.
    auto default_node_budget() -> std::uint64_t;

    /// A family F of forbidden r-graphs, realizing the indicator 1_F(H).
    class ForbiddenFamily
    {
    public:
        struct ExplicitList
        {
            std::vector<Pattern> patterns;
        };

        /// The single expansion H_F^r of a graph F.
        struct Expansion
        {
            Hypergraph base;
            unsigned r;
        };

        /// Every weak expansion of K_{core_order} into r-graphs.
        struct WeakExpansion
        {
            std::size_t core_order;
            unsigned r;
        };

        using Variant = std::variant<ExplicitList, Expansion, WeakExpansion>;

        /// `r` fixes the uniformity of an empty list; otherwise it must agree
        /// with the patterns.
        static auto list(std::vector<Pattern> patterns, std::optional<unsigned> r = std::nullopt) -> ForbiddenFamily;
        static auto expansion(Hypergraph base, unsigned r) -> ForbiddenFamily;
        static auto weak_expansion(std::size_t core_order, unsigned r) -> ForbiddenFamily;

        auto variant() const -> const Variant & { return variant_; }
        /// nullopt for an empty list with no declared uniformity (matches any host).
        auto uniformity() const -> std::optional<unsigned> { return r_; }
        auto describe() const -> std::string;

        /// Every blowup of an F-free host stays F-free. True for weak expansions,
        /// and for lists of 2-covered patterns.
        auto blowup_invariant() const -> bool;

    private:
        ForbiddenFamily(Variant v, std::optional<unsigned> r) : variant_(std::move(v)), r_(r) {}

        Variant variant_;
        std::optional<unsigned> r_;
    };

    auto contains_subgraph(const Pattern & p, const Hypergraph & h) -> bool;
    /// Witness map p -> h, if any.
    auto find_subgraph(const Pattern & p, const Hypergraph & h) -> std::optional<std::vector<Vertex>>;
    /// Is there a copy of p in h that uses the edge `e` (sorted)? Used by
    /// incremental freeness checks after adding `e`.
    auto contains_subgraph_through(const Pattern & p, const Hypergraph & h, std::span<const Vertex> e) -> bool;

    /// 1_F(H). Throws ArityError on mismatched uniformity and UndecidedError if
    /// an expansion search runs out of budget.
    auto is_free(const ForbiddenFamily & family, const Hypergraph & h, std::uint64_t budget = default_node_budget()) -> bool;

    struct ExpansionWitness
    {
        /// core[w] = host vertex of graph vertex w.
        std::vector<Vertex> core;
        /// One host edge per edge of F, in F's edge order.
        EdgeList edges;
    };

    /// Does h contain H_F^r? Embeds F into the 2-shadow and then looks for
    /// pairwise disjoint (r-2)-sets in the pair links, avoiding the core.
    auto find_expansion(const Hypergraph & f, unsigned r, const Hypergraph & h,
            std::uint64_t budget = default_node_budget()) -> std::optional<ExpansionWitness>;
    auto contains_expansion(const Hypergraph & f, unsigned r, const Hypergraph & h,
            std::uint64_t budget = default_node_budget()) -> bool;

    struct WeakExpansionWitness
    {
        VertexSet core;
        /// For each pair of core (lexicographic order) an edge meeting the core in exactly that pair.
        EdgeList edges;
    };

    /// A member of the weak-expansion family of K_{core_order} embeds in h iff
    /// some core S of that size has, for every pair {u, v} in S, an edge e with
    /// e cap S = {u, v}.
    auto find_weak_expansion(std::size_t core_order, unsigned r, const Hypergraph & h) -> std::optional<WeakExpansionWitness>;
    auto contains_weak_expansion(std::size_t core_order, unsigned r, const Hypergraph & h) -> bool;

    /// A partition into l parts (some possibly empty) with every edge meeting
    /// each part at most once, i.e. a proper l-colouring of the 2-shadow.
    auto is_l_partite(const Hypergraph & h, std::size_t l) -> std::optional<VertexPartition>;

    /// A homomorphism h -> g, if one exists.
    auto find_coloring(const Hypergraph & h, const Hypergraph & g) -> std::optional<std::vector<Vertex>>;
}
