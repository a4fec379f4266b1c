#pragma once

#include <xh/forbid.hpp>
#include <xh/homcount.hpp>
#include <xh/hypergraph.hpp>
#include <xh/symlab.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xh
{
    /// labeling[v] = position of v in the canonical order.
    auto canonical_labeling(const Hypergraph & h) -> std::vector<Vertex>;
    /// relabel(h, canonical_labeling(h)); equal for two inputs iff they are isomorphic.
    auto canonical_form(const Hypergraph & h) -> Hypergraph;
    auto are_isomorphic(const Hypergraph & a, const Hypergraph & b) -> bool;

    struct GenerationOptions
    {
        /// Lifts the order cap (n <= 10 for r = 2, n <= 8 for r = 3, n <= 7 otherwise).
        bool override_cap = false;
    };

    struct GenerationStats
    {
        std::size_t visited = 0;
        /// Children built across all levels, before deduplication.
        std::size_t nodes = 0;
    };

    auto generation_cap(unsigned r) -> std::size_t;

    using HostVisitor = std::function<void(const Hypergraph &)>;

    /// Calls visit once per isomorphism class of family-free r-graphs on n
    /// vertices, in canonical form, level by level in the number of edges.
    /// The visitor is always called from the calling thread.
    auto generate_free(std::size_t n, unsigned r, const ForbiddenFamily & family, const HostVisitor & visit,
            const GenerationOptions & options = {}) -> GenerationStats;

    struct SearchOptions
    {
        GenerationOptions generation;
        std::size_t max_witnesses = 32;
        std::string pattern_id;
    };

    struct SearchReport
    {
        std::size_t n;
        std::string pattern_id;
        std::string family_spec;
        Count extremal_value;
        /// Extremal hosts up to isomorphism; `witnesses` keeps at most max_witnesses of them.
        std::size_t witness_count;
        std::vector<Hypergraph> witnesses;
        double elapsed_seconds;
        std::size_t nodes_explored;
    };

    /// inj(n, Q, F): the largest inj(Q, H) over F-free r-graphs H on n vertices.
    auto brute_force_extremal(std::size_t n, const Pattern & q, const ForbiddenFamily & family,
            const SearchOptions & options = {}) -> SearchReport;

    /// 10 * prod_{i=0}^{4} floor((n + i) / 5).
    auto pentagon_formula(std::size_t n) -> Count;

    struct PentagonRow
    {
        std::size_t n;
        Count formula_value;
        std::optional<Count> brute_value;
        Count construction_value;
        bool match;
    };

    struct PentagonOptions
    {
        /// Brute force the rows with n <= brute_max (when within the generation cap).
        bool brute = false;
        std::size_t brute_max = 9;
        GenerationOptions generation;
    };

    auto verify_pentagon(const std::vector<std::size_t> & ns, const PentagonOptions & options = {}) -> std::vector<PentagonRow>;

    enum class ProbeMode
    {
        Exhaustive,
        Witnesses,
    };

    struct ProbeEntry
    {
        Hypergraph host;
        Count min_q_degree;
        bool member;
    };

    struct ProbeOptions
    {
        GenerationOptions generation;
        /// inj(n, Q, F) if already known; otherwise computed by brute force.
        std::optional<Count> extremal_value;
        /// Hosts probed in Witnesses mode; the extremal witnesses when empty.
        std::vector<Hypergraph> hosts;
    };

    struct ProbeReport
    {
        std::size_t n;
        Count extremal_value;
        /// (1 - eps) * v(Q) * inj(n, Q, F) / n.
        double threshold;
        std::size_t scanned;
        /// Hosts whose minimum Q-degree reaches the threshold.
        std::vector<ProbeEntry> qualifiers;
        std::vector<Hypergraph> counterexamples;

        auto holds() const -> bool { return counterexamples.empty(); }
    };

    auto degree_stability_probe(const Pattern & q, const ForbiddenFamily & family, const Membership & membership,
            double eps, std::size_t n, ProbeMode mode, const ProbeOptions & options = {}) -> ProbeReport;
}
