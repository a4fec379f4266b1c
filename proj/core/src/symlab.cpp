#include <xh/symlab.hpp>

#include <algorithm>
#include <map>

namespace xh
{
    auto to_string(SignedCount value) -> std::string
    {
        if (value < 0)
            return "-" + to_string(Count(-value));
        return to_string(Count(value));
    }

    GammaFunctional::GammaFunctional(Pattern q, ForbiddenFamily f) :
        q_(std::move(q)), f_(std::move(f))
    {
        if (auto r = f_.uniformity(); r && *r != q_.uniformity())
            throw ArityError("Gamma: pattern and family uniformities differ");
    }

    auto GammaFunctional::operator()(const Hypergraph & h) const -> Count
    {
        Count count = count_inj(q_, h);
        if (count == 0)
            return 0;
        return is_free(f_, h) ? count : 0;
    }

    auto gamma_value(const GammaFunctional & gamma, const Hypergraph & h) -> Count
    {
        return gamma(h);
    }

    auto gamma_degree(const GammaFunctional & gamma, const Hypergraph & h, Vertex v) -> SignedCount
    {
        if (v >= h.order())
            throw Error("gamma_degree: vertex out of range");
        return SignedCount(gamma(h)) - SignedCount(gamma(remove_vertex(h, v)));
    }

    auto gamma_degrees(const GammaFunctional & gamma, const Hypergraph & h) -> std::vector<SignedCount>
    {
        const auto whole = SignedCount(gamma(h));
        std::vector<SignedCount> out;
        out.reserve(h.order());
        for (Vertex v = 0; v < h.order(); ++v)
            out.push_back(whole - SignedCount(gamma(remove_vertex(h, v))));
        return out;
    }

    auto gamma_degree_stats(const GammaFunctional & gamma, const Hypergraph & h) -> GammaDegreeStats
    {
        auto degs = gamma_degrees(gamma, h);
        if (degs.empty())
            return {};
        GammaDegreeStats s;
        s.min = *std::min_element(degs.begin(), degs.end());
        s.max = *std::max_element(degs.begin(), degs.end());
        long double sum = 0;
        for (auto d : degs)
            sum += static_cast<long double>(d);
        s.mean = static_cast<double>(sum / static_cast<long double>(degs.size()));
        return s;
    }

    auto uniformity_residual(const GammaFunctional & gamma, const Hypergraph & h) -> SignedCount
    {
        SignedCount sum = 0;
        for (auto d : gamma_degrees(gamma, h))
            sum += d;
        return sum - SignedCount(gamma.k()) * SignedCount(gamma(h));
    }

    auto equivalence_classes(const Hypergraph & h) -> std::vector<VertexSet>
    {
        const unsigned r = h.uniformity();
        std::vector<EdgeList> links(h.order());
        for (auto e : h.edges())
            for (unsigned i = 0; i < r; ++i) {
                VertexSet rest;
                for (unsigned j = 0; j < r; ++j)
                    if (j != i)
                        rest.push_back(e[j]);
                links[e[i]].push_back(std::move(rest));
            }
        // Edges arrive in lexicographic order, so each link is already sorted.
        std::map<EdgeList, std::size_t> index;
        std::vector<VertexSet> classes;
        for (Vertex v = 0; v < h.order(); ++v) {
            auto [it, fresh] = index.try_emplace(links[v], classes.size());
            if (fresh)
                classes.emplace_back();
            classes[it->second].push_back(v);
        }
        return classes;
    }

    auto psi(const Hypergraph & h) -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & c : equivalence_classes(h))
            total += c.size() * c.size();
        return total;
    }

    namespace
    {
        auto covered_matrix(const Hypergraph & h) -> std::vector<bool>
        {
            const std::size_t n = h.order();
            std::vector<bool> covered(n * n, false);
            for (auto e : h.edges())
                for (auto a : e)
                    for (auto b : e)
                        covered[a * n + b] = true;
            return covered;
        }

        struct Candidate
        {
            std::size_t class_size;
            Vertex u;
            Vertex v;
            auto operator<=>(const Candidate &) const = default;
        };

        /// First uncovered non-equivalent pair with |class(u)| <= |class(v)|, by (|class(u)|, u, v).
        auto next_pair(const Hypergraph & h) -> std::optional<Candidate>
        {
            const std::size_t n = h.order();
            auto classes = equivalence_classes(h);
            std::vector<std::size_t> class_of(n), class_size(n);
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (auto v : classes[c]) {
                    class_of[v] = c;
                    class_size[v] = classes[c].size();
                }
            auto covered = covered_matrix(h);
            std::optional<Candidate> best;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    if (u == v || class_of[u] == class_of[v] || covered[u * n + v])
                        continue;
                    if (class_size[u] > class_size[v])
                        continue;
                    Candidate c{class_size[u], u, v};
                    if (! best || c < *best)
                        best = c;
                }
            return best;
        }
    }

    auto is_symmetrized(const Hypergraph & h) -> bool
    {
        return ! next_pair(h).has_value();
    }

    auto to_string(SymmetrizationStatus status) -> std::string
    {
        switch (status) {
            case SymmetrizationStatus::Symmetrized: return "Symmetrized";
            case SymmetrizationStatus::IterationCapHit: return "IterationCapHit";
            case SymmetrizationStatus::NotIncreasing: return "NotIncreasing";
        }
        return "?";
    }

    auto symmetrize(const GammaFunctional & gamma, const Hypergraph & h, std::size_t max_iters) -> SymmetrizationResult
    {
        SymmetrizationResult result{h, {}, SymmetrizationStatus::Symmetrized, std::nullopt};
        Hypergraph & current = result.final;
        Count g = gamma(current);
        std::size_t p = psi(current);

        while (true) {
            auto pair = next_pair(current);
            if (! pair) {
                result.status = SymmetrizationStatus::Symmetrized;
                return result;
            }
            if (result.steps.size() >= max_iters) {
                result.status = SymmetrizationStatus::IterationCapHit;
                return result;
            }

            auto forward = symmetrize_move(current, pair->u, pair->v);
            auto backward = symmetrize_move(current, pair->v, pair->u);
            auto g_forward = gamma(forward);
            auto g_backward = gamma(backward);
            // The larger Gamma wins; ties go to u -> v, where Psi gains at least 2.
            bool take_forward = g_forward >= g_backward;
            auto & next = take_forward ? forward : backward;
            auto g2 = take_forward ? g_forward : g_backward;
            auto p2 = psi(next);
            if (g2 < g || (g2 == g && p2 <= p)) {
                result.status = SymmetrizationStatus::NotIncreasing;
                result.stuck_pair = std::pair{pair->u, pair->v};
                return result;
            }
            result.steps.push_back({pair->u, pair->v, take_forward, g, g2, p, p2});
            g = g2;
            p = p2;
            current = std::move(next);
        }
    }

    auto z_set(const GammaFunctional & gamma, const Hypergraph & h, double delta, double reference_exdeg) -> VertexSet
    {
        if (delta < 0.0 || delta > 1.0)
            throw Error("z_set: delta must lie in [0, 1]");
        const long double bound = (1.0L - delta) * static_cast<long double>(reference_exdeg);
        auto degs = gamma_degrees(gamma, h);
        VertexSet out;
        for (Vertex v = 0; v < h.order(); ++v)
            if (static_cast<long double>(degs[v]) <= bound)
                out.push_back(v);
        return out;
    }

    auto clone_link(const Hypergraph & h, Vertex v, Vertex u) -> Hypergraph
    {
        if (u == v)
            throw Error("clone_link: u and v must differ");
        if (u >= h.order() || v >= h.order())
            throw Error("clone_link: vertex out of range");
        std::vector<Vertex> flat;
        for (auto e : h.edges()) {
            bool has_v = std::binary_search(e.begin(), e.end(), v);
            if (has_v)
                continue;
            flat.insert(flat.end(), e.begin(), e.end());
            if (std::binary_search(e.begin(), e.end(), u))
                for (auto x : e)
                    flat.push_back(x == u ? v : x);
        }
        return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
    }

    auto Membership::contains(const Hypergraph & h) const -> bool
    {
        if (auto * lp = std::get_if<LPartite>(&variant_))
            return is_l_partite(h, lp->l).has_value();
        return find_coloring(h, std::get<Colorable>(variant_).target).has_value();
    }

    auto Membership::describe() const -> std::string
    {
        if (auto * lp = std::get_if<LPartite>(&variant_))
            return "l-partite(" + std::to_string(lp->l) + ")";
        return "colorable(G on " + std::to_string(std::get<Colorable>(variant_).target.order()) + " vertices)";
    }

    auto check_vertex_extendability(const GammaFunctional & gamma, const Membership & membership, const Hypergraph & h,
            Vertex v) -> ExtendabilityReport
    {
        if (v >= h.order())
            throw Error("check_vertex_extendability: vertex out of range");
        ExtendabilityReport report{};
        report.minus_v_member = membership.contains(remove_vertex(h, v));
        report.member = membership.contains(h);
        report.gamma = gamma(h);
        auto stats = gamma_degree_stats(gamma, h);
        report.min_gamma_degree = stats.min;
        report.mean_gamma_degree = stats.mean;
        if (report.gamma > 0)
            report.normalized_min_degree = static_cast<double>(static_cast<long double>(stats.min) * h.order() /
                    (static_cast<long double>(gamma.k()) * static_cast<long double>(report.gamma)));
        return report;
    }
}
