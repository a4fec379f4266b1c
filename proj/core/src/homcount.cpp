#include <xh/homcount.hpp>
#include <xh/parallel.hpp>

#include "combinatorics.hpp"
#include "matcher.hpp"

#include <algorithm>

namespace xh
{
    namespace
    {
        void require_same_uniformity(const Hypergraph & a, const Hypergraph & b)
        {
            if (a.uniformity() != b.uniformity())
                throw ArityError("uniformity mismatch: pattern is " + std::to_string(a.uniformity()) +
                        "-uniform, host is " + std::to_string(b.uniformity()) + "-uniform");
        }

        auto count_maps(const Hypergraph & q, const Hypergraph & h, bool injective) -> Count
        {
            require_same_uniformity(q, h);
            if (injective && h.order() < q.order())
                return 0;
            detail::HostIndex host(h);
            detail::PatternPlan plan(q);
            if (plan.n == 0)
                return 1;

            auto firsts = detail::Matcher(plan, host, {injective, {}}).first_candidates();
            std::vector<Count> partial(firsts.size(), 0);
            parallel_for(firsts.size(), [&](std::size_t i) {
                detail::Matcher m(plan, host, {injective, {}});
                partial[i] = m.count_from(firsts[i]);
            });
            Count total = 0;
            for (auto c : partial)
                total += c;
            return total;
        }

        void enumerate_maps(const Hypergraph & q, const Hypergraph & h, bool injective, const MapVisitor & visit)
        {
            require_same_uniformity(q, h);
            if (injective && h.order() < q.order())
                return;
            detail::HostIndex host(h);
            detail::PatternPlan plan(q);
            detail::Matcher m(plan, host, {injective, {}});
            m.run([&](std::span<const Vertex> map) {
                visit(map);
                return true;
            });
        }
    }

    Pattern::Pattern(Hypergraph graph) :
        graph_(std::move(graph)), aut_count_(0)
    {
        std::vector<bool> touched(graph_.order(), false);
        for (auto v : graph_.flat())
            touched[v] = true;
        for (std::size_t v = 0; v < touched.size(); ++v)
            if (! touched[v])
                throw Error("pattern has isolated vertex " + std::to_string(v));
        aut_count_ = count_maps(graph_, graph_, true);
    }

    auto count_hom(const Pattern & q, const Hypergraph & h) -> Count
    {
        return count_maps(q.graph(), h, false);
    }

    auto count_inj(const Pattern & q, const Hypergraph & h) -> Count
    {
        return count_maps(q.graph(), h, true);
    }

    void enumerate_inj(const Pattern & q, const Hypergraph & h, const MapVisitor & visit)
    {
        enumerate_maps(q.graph(), h, true, visit);
    }

    void enumerate_hom(const Pattern & q, const Hypergraph & h, const MapVisitor & visit)
    {
        enumerate_maps(q.graph(), h, false, visit);
    }

    auto find_inj(const Hypergraph & from, const Hypergraph & to) -> std::optional<std::vector<Vertex>>
    {
        require_same_uniformity(from, to);
        if (to.order() < from.order())
            return std::nullopt;
        detail::HostIndex host(to);
        detail::PatternPlan plan(from);
        detail::Matcher m(plan, host, {true, {}});
        std::optional<std::vector<Vertex>> found;
        m.run([&](std::span<const Vertex> map) {
            found.emplace(map.begin(), map.end());
            return false;
        });
        return found;
    }

    auto is_homomorphism(const Hypergraph & from, const Hypergraph & to, std::span<const Vertex> map) -> bool
    {
        if (from.uniformity() != to.uniformity() || map.size() != from.order())
            return false;
        std::vector<Vertex> image(from.uniformity());
        for (auto e : from.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (map[e[i]] >= to.order())
                    return false;
                image[i] = map[e[i]];
            }
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end() || ! to.contains_edge(image))
                return false;
        }
        return true;
    }

    auto q_degrees(const Pattern & q, const Hypergraph & h) -> std::vector<Count>
    {
        std::vector<Count> out(h.order(), 0);
        enumerate_inj(q, h, [&](std::span<const Vertex> map) {
            for (auto v : map)
                ++out[v];
        });
        return out;
    }

    auto q_degree(const Pattern & q, const Hypergraph & h, Vertex v) -> Count
    {
        if (v >= h.order())
            throw Error("q_degree: vertex out of range");
        Count total = 0;
        enumerate_inj(q, h, [&](std::span<const Vertex> map) {
            if (std::find(map.begin(), map.end(), v) != map.end())
                ++total;
        });
        return total;
    }

    auto q_degree_stats(const Pattern & q, const Hypergraph & h) -> DegreeStats
    {
        auto degs = q_degrees(q, h);
        if (degs.empty())
            return {};
        DegreeStats s;
        s.min = *std::min_element(degs.begin(), degs.end());
        s.max = *std::max_element(degs.begin(), degs.end());
        long double sum = 0;
        for (auto d : degs)
            sum += static_cast<long double>(d);
        s.mean = static_cast<double>(sum / static_cast<long double>(degs.size()));
        return s;
    }

    auto automorphism_count(const Pattern & q) -> Count
    {
        return q.aut_count();
    }

    auto ex_from_inj(Count value, const Pattern & q) -> Rational
    {
        return make_rational(value, q.aut_count());
    }

    auto count_inj_blowup_exact(const Pattern & q, const Hypergraph & g, std::span<const std::size_t> sizes) -> Count
    {
        if (sizes.size() != g.order())
            throw ArityError("count_inj_blowup_exact: need one part size per vertex");
        Count total = 0;
        std::vector<std::size_t> fibre(g.order(), 0);
        enumerate_hom(q, g, [&](std::span<const Vertex> map) {
            std::fill(fibre.begin(), fibre.end(), 0);
            for (auto v : map)
                ++fibre[v];
            Count term = 1;
            for (std::size_t i = 0; i < fibre.size() && term != 0; ++i)
                term *= falling_factorial(sizes[i], fibre[i]);
            total += term;
        });
        return total;
    }
}
