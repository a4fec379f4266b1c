#pragma once

#include <xh/forbid.hpp>
#include <xh/homcount.hpp>
#include <xh/hypergraph.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace xh
{
    /// Signed counts, for Gamma-degrees and residuals which can go negative.
    __extension__ typedef __int128 SignedCount;

    auto to_string(SignedCount value) -> std::string;

    /// Gamma(H) = inj(Q, H) * 1_F(H). Gamma is v(Q)-uniform, so k = v(Q).
    class GammaFunctional
    {
    public:
        GammaFunctional(Pattern q, ForbiddenFamily f);

        auto pattern() const -> const Pattern & { return q_; }
        auto family() const -> const ForbiddenFamily & { return f_; }
        auto k() const -> std::size_t { return q_.order(); }

        auto operator()(const Hypergraph & h) const -> Count;

    private:
        Pattern q_;
        ForbiddenFamily f_;
    };

    auto gamma_value(const GammaFunctional & gamma, const Hypergraph & h) -> Count;

    /// d_{Gamma,H}(v) = Gamma(H) - Gamma(H - v).
    auto gamma_degree(const GammaFunctional & gamma, const Hypergraph & h, Vertex v) -> SignedCount;
    auto gamma_degrees(const GammaFunctional & gamma, const Hypergraph & h) -> std::vector<SignedCount>;

    struct GammaDegreeStats
    {
        SignedCount min = 0;
        double mean = 0.0;
        SignedCount max = 0;
    };

    auto gamma_degree_stats(const GammaFunctional & gamma, const Hypergraph & h) -> GammaDegreeStats;

    /// sum_v d_{Gamma,H}(v) - k * Gamma(H). Zero on every Gamma-positive host.
    auto uniformity_residual(const GammaFunctional & gamma, const Hypergraph & h) -> SignedCount;

    /// Vertices grouped by identical links, classes ordered by smallest member.
    auto equivalence_classes(const Hypergraph & h) -> std::vector<VertexSet>;
    /// Psi(H) = sum of squared class sizes.
    auto psi(const Hypergraph & h) -> std::size_t;
    /// Every uncovered pair is equivalent.
    auto is_symmetrized(const Hypergraph & h) -> bool;

    enum class SymmetrizationStatus
    {
        Symmetrized,
        IterationCapHit,
        NotIncreasing,
    };

    auto to_string(SymmetrizationStatus status) -> std::string;

    struct SymmetrizationStep
    {
        /// The scanned pair; `forward` means u was symmetrized into v.
        Vertex u;
        Vertex v;
        bool forward;
        Count gamma_before;
        Count gamma_after;
        std::size_t psi_before;
        std::size_t psi_after;
    };

    struct SymmetrizationResult
    {
        Hypergraph final;
        std::vector<SymmetrizationStep> steps;
        SymmetrizationStatus status;
        /// The pair on which both moves lost ground, for NotIncreasing.
        std::optional<std::pair<Vertex, Vertex>> stuck_pair;
    };

    /// Repeatedly symmetrizes an uncovered non-equivalent pair, taking the move
    /// that makes (Gamma, Psi) lexicographically larger, until the host is
    /// symmetrized, the iteration cap is reached, or neither move gains.
    auto symmetrize(const GammaFunctional & gamma, const Hypergraph & h, std::size_t max_iters) -> SymmetrizationResult;

    /// Z_{Gamma,delta}(H) = { v : d_{Gamma,H}(v) <= (1 - delta) * reference_exdeg }.
    auto z_set(const GammaFunctional & gamma, const Hypergraph & h, double delta, double reference_exdeg) -> VertexSet;

    /// Drops the edges through v and attaches v to a copy of L_{H-v}(u).
    auto clone_link(const Hypergraph & h, Vertex v, Vertex u) -> Hypergraph;

    /// A decidable hereditary family used as the target of stability checks.
    class Membership
    {
    public:
        struct LPartite
        {
            std::size_t l;
        };

        struct Colorable
        {
            Hypergraph target;
        };

        static auto l_partite(std::size_t l) -> Membership { return Membership(LPartite{l}); }
        static auto colorable(Hypergraph target) -> Membership { return Membership(Colorable{std::move(target)}); }

        auto contains(const Hypergraph & h) const -> bool;
        auto describe() const -> std::string;

    private:
        using Variant = std::variant<LPartite, Colorable>;
        explicit Membership(Variant v) : variant_(std::move(v)) {}

        Variant variant_;
    };

    struct ExtendabilityReport
    {
        bool minus_v_member;
        bool member;
        Count gamma;
        SignedCount min_gamma_degree;
        double mean_gamma_degree;
        /// delta_Gamma(H) * n / (k * Gamma(H)); empty when Gamma(H) = 0.
        std::optional<double> normalized_min_degree;

        auto hypothesis_met() const -> bool { return minus_v_member; }
        /// H - v in the family forces H into it.
        auto holds() const -> bool { return ! minus_v_member || member; }
    };

    auto check_vertex_extendability(const GammaFunctional & gamma, const Membership & membership, const Hypergraph & h,
            Vertex v) -> ExtendabilityReport;
}
