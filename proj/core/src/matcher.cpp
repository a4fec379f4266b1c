#include "matcher.hpp"

#include <algorithm>
#include <bit>

namespace xh::detail
{
    HostIndex::HostIndex(const Hypergraph & h) :
        graph_(&h), n_(h.order()), r_(h.uniformity()), adj_(h.order(), Bitset(h.order())), degree_(h.order(), 0)
    {
        for (auto e : h.edges()) {
            for (auto a : e) {
                ++degree_[a];
                for (auto b : e)
                    if (a != b)
                        adj_[a].set(b);
            }
        }
        bits_ = n_ <= 1 ? 1U : unsigned(std::bit_width(n_ - 1));
        packed_ = r_ >= 3 && std::size_t(bits_) * r_ <= 64;
        if (packed_) {
            keys_.reserve(h.size() * 2);
            for (auto e : h.edges())
                keys_.insert(pack(e));
        }
    }

    auto HostIndex::pack(std::span<const Vertex> sorted) const -> std::uint64_t
    {
        std::uint64_t key = 0;
        for (auto v : sorted)
            key = (key << bits_) | v;
        return key;
    }

    auto HostIndex::has_edge(std::span<const Vertex> vertices) const -> bool
    {
        Vertex buf[16];
        std::vector<Vertex> big;
        Vertex * sorted = buf;
        if (vertices.size() > 16) {
            big.assign(vertices.begin(), vertices.end());
            sorted = big.data();
        }
        else
            std::copy(vertices.begin(), vertices.end(), buf);
        std::sort(sorted, sorted + vertices.size());
        std::span<const Vertex> s{sorted, vertices.size()};
        if (packed_)
            return keys_.contains(pack(s));
        return graph_->contains_edge(s);
    }

    PatternPlan::PatternPlan(const Hypergraph & q, std::span<const Vertex> prefix) :
        n(q.order()), r(q.uniformity()), position(q.order(), q.order()), back_neighbors(q.order()),
        completing(q.order()), degree(q.order(), 0)
    {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        std::vector<std::size_t> vdeg(n, 0), sdeg(n, 0);
        for (auto e : q.edges())
            for (auto a : e) {
                ++vdeg[a];
                for (auto b : e)
                    if (a != b && ! adj[a][b]) {
                        adj[a][b] = true;
                        ++sdeg[a];
                    }
            }

        auto place = [&](Vertex v) {
            position[v] = order.size();
            order.push_back(v);
        };
        for (auto v : prefix)
            if (position[v] == n)
                place(v);
        while (order.size() < n) {
            Vertex best = 0;
            bool found = false;
            std::tuple<std::size_t, std::size_t, std::size_t> best_key{};
            for (Vertex v = 0; v < n; ++v) {
                if (position[v] != n)
                    continue;
                std::size_t links = 0;
                for (auto u : order)
                    if (adj[v][u])
                        ++links;
                std::tuple<std::size_t, std::size_t, std::size_t> key{links, sdeg[v], vdeg[v]};
                if (! found || key > best_key) {
                    best = v;
                    best_key = key;
                    found = true;
                }
            }
            place(best);
        }

        for (std::size_t k = 0; k < n; ++k) {
            degree[k] = vdeg[order[k]];
            for (std::size_t p = 0; p < k; ++p)
                if (adj[order[k]][order[p]])
                    back_neighbors[k].push_back(p);
        }
        for (auto e : q.edges()) {
            std::vector<std::size_t> pos;
            for (auto v : e)
                pos.push_back(position[v]);
            std::size_t last = *std::max_element(pos.begin(), pos.end());
            completing[last].push_back(std::move(pos));
        }
    }

    Matcher::Matcher(const PatternPlan & plan, const HostIndex & host, SearchOptions options) :
        plan_(plan), host_(host), options_(std::move(options)), map_(plan.n, 0), image_(plan.n, 0),
        used_(host.order())
    {
        if (options_.domains.size() < plan_.n)
            options_.domains.resize(plan_.n);
        scratch_.resize(plan_.r);
    }

    auto Matcher::candidates(std::size_t k) const -> Bitset
    {
        const auto & back = plan_.back_neighbors[k];
        Bitset cand = back.empty() ? Bitset(host_.order(), true) : host_.adjacency(image_[back[0]]);
        for (std::size_t i = 1; i < back.size(); ++i)
            cand &= host_.adjacency(image_[back[i]]);
        if (const auto & dom = options_.domains[plan_.order[k]])
            cand &= *dom;
        if (options_.injective) {
            cand.and_not(used_);
            if (plan_.degree[k] > 0) {
                Bitset filtered = cand;
                cand.for_each([&](std::size_t v) {
                    if (host_.degree(Vertex(v)) < plan_.degree[k])
                        filtered.reset(v);
                });
                cand = std::move(filtered);
            }
        }
        return cand;
    }

    auto Matcher::admissible(std::size_t k, Vertex v) const -> bool
    {
        if (v >= host_.order())
            return false;
        return candidates(k).test(v);
    }

    auto Matcher::edges_ok(std::size_t k) -> bool
    {
        if (plan_.r == 2)
            return true;
        for (const auto & e : plan_.completing[k]) {
            for (std::size_t i = 0; i < e.size(); ++i)
                scratch_[i] = image_[e[i]];
            if (! host_.has_edge(scratch_))
                return false;
        }
        return true;
    }

    void Matcher::assign(std::size_t k, Vertex v)
    {
        image_[k] = v;
        map_[plan_.order[k]] = v;
        if (options_.injective)
            used_.set(v);
    }

    void Matcher::unassign(std::size_t, Vertex v)
    {
        if (options_.injective)
            used_.reset(v);
    }

    auto Matcher::first_candidates() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        if (plan_.n == 0)
            return out;
        candidates(0).for_each([&](std::size_t v) { out.push_back(Vertex(v)); });
        return out;
    }

    auto Matcher::count_at(std::size_t k) -> Count
    {
        auto cand = candidates(k);
        if (k + 1 == plan_.n && plan_.r == 2)
            return Count(cand.count());
        Count total = 0;
        cand.for_each([&](std::size_t c) {
            Vertex v = Vertex(c);
            assign(k, v);
            if (edges_ok(k))
                total += (k + 1 == plan_.n) ? Count(1) : count_at(k + 1);
            unassign(k, v);
        });
        return total;
    }

    auto Matcher::count() -> Count
    {
        if (plan_.n == 0)
            return 1;
        return count_at(0);
    }

    auto Matcher::count_from(Vertex first) -> Count
    {
        if (! admissible(0, first))
            return 0;
        assign(0, first);
        Count total = 0;
        if (edges_ok(0))
            total = plan_.n == 1 ? Count(1) : count_at(1);
        unassign(0, first);
        return total;
    }
}
