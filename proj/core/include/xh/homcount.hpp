#pragma once

#include <xh/hypergraph.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace xh
{
    /// A hypergraph used as the counted pattern Q. It has no isolated vertex;
    /// |Aut(Q)| = inj(Q, Q) is computed once at construction.
    class Pattern
    {
    public:
        explicit Pattern(Hypergraph graph);

        auto graph() const -> const Hypergraph & { return graph_; }
        auto uniformity() const -> unsigned { return graph_.uniformity(); }
        /// v(Q).
        auto order() const -> std::size_t { return graph_.order(); }
        auto aut_count() const -> Count { return aut_count_; }

    private:
        Hypergraph graph_;
        Count aut_count_;
    };

    /// map[w] = image of pattern vertex w.
    using MapVisitor = std::function<void(std::span<const Vertex> map)>;

    /// |Hom(Q, H)|.
    auto count_hom(const Pattern & q, const Hypergraph & h) -> Count;
    /// |Inj(Q, H)|; zero whenever v(H) < v(Q).
    auto count_inj(const Pattern & q, const Hypergraph & h) -> Count;

    /// Streams every injective homomorphism once, in a fixed order
    /// (lexicographic in the images along the search order).
    void enumerate_inj(const Pattern & q, const Hypergraph & h, const MapVisitor & visit);
    void enumerate_hom(const Pattern & q, const Hypergraph & h, const MapVisitor & visit);

    /// First injective homomorphism, if any. Works for any source hypergraph
    /// (isolated vertices allowed).
    auto find_inj(const Hypergraph & from, const Hypergraph & to) -> std::optional<std::vector<Vertex>>;

    /// Checks that `map` sends every edge of `from` onto an edge of `to`.
    auto is_homomorphism(const Hypergraph & from, const Hypergraph & to, std::span<const Vertex> map) -> bool;

    /// d_{Q,H}(v): injective homomorphisms whose image contains v.
    auto q_degree(const Pattern & q, const Hypergraph & h, Vertex v) -> Count;
    /// All Q-degrees in one enumeration.
    auto q_degrees(const Pattern & q, const Hypergraph & h) -> std::vector<Count>;

    struct DegreeStats
    {
        Count min = 0;
        double mean = 0.0;
        Count max = 0;
    };

    auto q_degree_stats(const Pattern & q, const Hypergraph & h) -> DegreeStats;

    auto automorphism_count(const Pattern & q) -> Count;
    /// inj / |Aut(Q)|, exact.
    auto ex_from_inj(Count value, const Pattern & q) -> Rational;

    /// inj(Q, G(V_1..V_m)) without building the blowup: the sum over
    /// phi in Hom(Q, G) of prod_i (sizes[i])_{m_i(phi)}, falling factorials of
    /// the fibre sizes m_i(phi) = |phi^{-1}(i)|.
    auto count_inj_blowup_exact(const Pattern & q, const Hypergraph & g, std::span<const std::size_t> sizes) -> Count;
}
