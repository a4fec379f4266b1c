#include <xh/lagopt.hpp>
#include <xh/parallel.hpp>

#include "combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace xh
{
    LagrangePolynomial::LagrangePolynomial(std::size_t num_vars, std::size_t degree, std::vector<Term> terms) :
        num_vars_(num_vars), degree_(degree)
    {
        std::map<std::vector<std::uint32_t>, Count> merged;
        for (auto & t : terms) {
            if (t.exponents.size() != num_vars)
                throw ArityError("polynomial term has the wrong number of variables");
            auto total = std::accumulate(t.exponents.begin(), t.exponents.end(), std::size_t{0});
            if (total != degree)
                throw Error("polynomial term is not of degree " + std::to_string(degree));
            if (t.coefficient != 0)
                merged[std::move(t.exponents)] += t.coefficient;
        }
        for (auto & [exp, coef] : merged) {
            std::vector<Factor> factors;
            for (std::uint32_t i = 0; i < exp.size(); ++i)
                if (exp[i] > 0)
                    factors.push_back({i, exp[i]});
            sparse_.push_back(std::move(factors));
            coef_.push_back(static_cast<double>(coef));
            terms_.push_back({exp, coef});
        }
    }

    auto LagrangePolynomial::mass() const -> Count
    {
        Count total = 0;
        for (const auto & t : terms_)
            total += t.coefficient;
        return total;
    }

    namespace
    {
        auto ipow(double x, std::uint32_t e) -> double
        {
            double out = 1.0;
            for (std::uint32_t i = 0; i < e; ++i)
                out *= x;
            return out;
        }

        void require_dims(const LagrangePolynomial & p, std::size_t got)
        {
            if (got != p.num_vars())
                throw ArityError("point has " + std::to_string(got) + " coordinates, polynomial has " +
                        std::to_string(p.num_vars()) + " variables");
        }
    }

    auto LagrangePolynomial::eval(std::span<const double> x) const -> double
    {
        require_dims(*this, x.size());
        double total = 0.0;
        for (std::size_t t = 0; t < sparse_.size(); ++t) {
            double v = coef_[t];
            for (auto f : sparse_[t])
                v *= ipow(x[f.var], f.exp);
            total += v;
        }
        return total;
    }

    auto LagrangePolynomial::gradient(std::span<const double> x) const -> std::vector<double>
    {
        require_dims(*this, x.size());
        std::vector<double> g(num_vars_, 0.0);
        for (std::size_t t = 0; t < sparse_.size(); ++t) {
            const auto & fs = sparse_[t];
            for (std::size_t i = 0; i < fs.size(); ++i) {
                double v = coef_[t] * fs[i].exp * ipow(x[fs[i].var], fs[i].exp - 1);
                for (std::size_t j = 0; j < fs.size(); ++j)
                    if (j != i)
                        v *= ipow(x[fs[j].var], fs[j].exp);
                g[fs[i].var] += v;
            }
        }
        return g;
    }

    auto SimplexPoint::uniform(std::size_t m) -> SimplexPoint
    {
        return {std::vector<double>(m, m == 0 ? 0.0 : 1.0 / double(m))};
    }

    auto SimplexPoint::vertex(std::size_t m, std::size_t i) -> SimplexPoint
    {
        SimplexPoint out{std::vector<double>(m, 0.0)};
        out.weights.at(i) = 1.0;
        return out;
    }

    void SimplexPoint::validate() const
    {
        double sum = 0.0;
        for (auto w : weights) {
            if (! (w >= 0.0))
                throw Error("simplex point has a negative or non-finite entry");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw Error("simplex point does not sum to 1");
    }

    auto SimplexPoint::support(double eps) const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] > eps)
                out.push_back(i);
        return out;
    }

    auto project_to_simplex(std::span<const double> y) -> std::vector<double>
    {
        const std::size_t m = y.size();
        if (m == 0)
            return {};
        std::vector<double> s(y.begin(), y.end());
        std::sort(s.begin(), s.end(), std::greater<>());
        double cumulative = 0.0, theta = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            cumulative += s[k];
            double t = (cumulative - 1.0) / double(k + 1);
            if (s[k] - t > 0.0)
                theta = t;
        }
        std::vector<double> out(m);
        for (std::size_t i = 0; i < m; ++i)
            out[i] = std::max(0.0, y[i] - theta);
        return out;
    }

    auto build_poly(const Pattern & q, const Hypergraph & host) -> LagrangePolynomial
    {
        std::map<std::vector<std::uint32_t>, Count> merged;
        std::vector<std::uint32_t> exp(host.order());
        enumerate_hom(q, host, [&](std::span<const Vertex> map) {
            std::fill(exp.begin(), exp.end(), 0);
            for (auto v : map)
                ++exp[v];
            ++merged[exp];
        });
        std::vector<LagrangePolynomial::Term> terms;
        for (auto & [e, c] : merged)
            terms.push_back({e, c});
        return LagrangePolynomial(host.order(), q.order(), std::move(terms));
    }

    auto eval_poly(const LagrangePolynomial & p, const SimplexPoint & x) -> double
    {
        return p.eval(x.weights);
    }

    auto grad_poly(const LagrangePolynomial & p, const SimplexPoint & x) -> std::vector<double>
    {
        return p.gradient(x.weights);
    }

    auto multiplier_residual(const LagrangePolynomial & p, const SimplexPoint & x, double support_eps) -> double
    {
        const double target = double(p.degree()) * p.eval(x.weights);
        auto g = p.gradient(x.weights);
        double worst = 0.0;
        for (auto i : x.support(support_eps))
            worst = std::max(worst, std::abs(g[i] - target));
        return worst;
    }

    auto full_support_check(const LagrangePolynomial & p, const SimplexPoint & x, double eps) -> bool
    {
        require_dims(p, x.weights.size());
        return std::all_of(x.weights.begin(), x.weights.end(), [&](double w) { return w >= eps; });
    }

    auto multiplicative_step(const LagrangePolynomial & p, const SimplexPoint & x) -> SimplexPoint
    {
        const double value = p.eval(x.weights);
        if (! (value > 0.0))
            return x;
        auto g = p.gradient(x.weights);
        SimplexPoint out{std::vector<double>(x.weights.size())};
        double sum = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            out.weights[i] = x.weights[i] * g[i] / (double(p.degree()) * value);
            sum += out.weights[i];
        }
        if (! std::isfinite(sum) || sum <= 0.0)
            throw NumericalError("multiplicative update produced a non-finite point (sum " + std::to_string(sum) + ")");
        for (auto & w : out.weights)
            w /= sum;
        return out;
    }

    auto multiplicative_ascent(const LagrangePolynomial & p, SimplexPoint x0, std::size_t max_iters, double tol) -> AscentRun
    {
        AscentRun run{std::move(x0), {}};
        double value = p.eval(run.x.weights);
        run.values.push_back(value);
        for (std::size_t it = 0; it < max_iters; ++it) {
            if (multiplier_residual(p, run.x) <= tol)
                break;
            auto next = multiplicative_step(p, run.x);
            double next_value = p.eval(next.weights);
            if (! std::isfinite(next_value))
                throw NumericalError("polynomial value became non-finite at iteration " + std::to_string(it));
            if (next_value < value - 1e-14 * std::max(1.0, std::abs(value))) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "multiplicative ascent decreased P at iteration " << it << ": " << value << " -> " << next_value;
                throw NumericalError(msg.str());
            }
            run.x = std::move(next);
            run.values.push_back(next_value);
            if (next_value - value <= 0.0 && it > 0)
                break;
            value = next_value;
        }
        return run;
    }

    namespace
    {
        auto polish(const LagrangePolynomial & p, SimplexPoint x, std::size_t iters) -> SimplexPoint
        {
            double value = p.eval(x.weights);
            for (std::size_t it = 0; it < iters; ++it) {
                auto g = p.gradient(x.weights);
                double scale = 0.0;
                for (auto v : g)
                    scale = std::max(scale, std::abs(v));
                if (scale == 0.0)
                    break;
                double step = 1.0 / scale;
                bool moved = false;
                while (step > 1e-18) {
                    std::vector<double> y(x.weights.size());
                    for (std::size_t i = 0; i < y.size(); ++i)
                        y[i] = x.weights[i] + step * g[i];
                    auto z = project_to_simplex(y);
                    double slope = 0.0;
                    for (std::size_t i = 0; i < z.size(); ++i)
                        slope += g[i] * (z[i] - x.weights[i]);
                    double candidate = p.eval(z);
                    if (candidate > value && candidate >= value + 1e-4 * slope) {
                        x.weights = std::move(z);
                        value = candidate;
                        moved = true;
                        break;
                    }
                    step *= 0.5;
                }
                if (! moved)
                    break;
            }
            return x;
        }

        auto dirichlet_point(std::size_t m, std::uint64_t seed, std::size_t index) -> SimplexPoint
        {
            std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index), std::uint32_t(index >> 32)};
            std::mt19937_64 rng(seq);
            std::exponential_distribution<double> expo(1.0);
            SimplexPoint x{std::vector<double>(m)};
            double sum = 0.0;
            for (auto & w : x.weights) {
                w = expo(rng) + 1e-300;
                sum += w;
            }
            for (auto & w : x.weights)
                w /= sum;
            return x;
        }
    }

    auto maximize_on_simplex(const LagrangePolynomial & p, const OptimizeOptions & options) -> OptimizeResult
    {
        const std::size_t m = p.num_vars();
        if (m == 0)
            return {p.is_zero() ? 0.0 : p.eval(std::vector<double>{}), SimplexPoint{}};
        if (p.is_zero())
            return {0.0, SimplexPoint::uniform(m)};

        const std::size_t runs = options.restarts + 1;
        std::vector<OptimizeResult> results(runs, OptimizeResult{0.0, {}});
        parallel_for(runs, [&](std::size_t i) {
            auto start = i == 0 ? SimplexPoint::uniform(m) : dirichlet_point(m, options.seed, i);
            auto ascent = multiplicative_ascent(p, std::move(start), options.max_iters, options.tol);
            auto x = polish(p, std::move(ascent.x), options.polish_iters);
            double value = p.eval(x.weights);
            if (! std::isfinite(value))
                throw NumericalError("restart " + std::to_string(i) + " produced a non-finite value");
            results[i] = {value, std::move(x)};
        });

        std::size_t best = 0;
        for (std::size_t i = 1; i < runs; ++i) {
            if (results[i].lambda > results[best].lambda ||
                    (results[i].lambda == results[best].lambda && results[i].x.weights < results[best].x.weights))
                best = i;
        }
        return results[best];
    }

    auto blowup_count(const LagrangePolynomial & p, std::span<const std::size_t> sizes) -> Count
    {
        require_dims(p, sizes.size());
        Count total = 0;
        for (const auto & t : p.terms()) {
            Count term = t.coefficient;
            for (std::size_t i = 0; i < sizes.size() && term != 0; ++i)
                if (t.exponents[i] > 0)
                    term *= falling_factorial(sizes[i], t.exponents[i]);
            total += term;
        }
        return total;
    }

    namespace
    {
        template <typename F>
        void for_each_composition(std::size_t n, std::size_t parts, std::vector<std::size_t> & sizes, std::size_t k, F & f)
        {
            if (k + 1 == parts) {
                sizes[k] = n;
                f(sizes);
                return;
            }
            for (std::size_t a = 0; a <= n; ++a) {
                sizes[k] = a;
                for_each_composition(n - a, parts, sizes, k + 1, f);
            }
        }
    }

    auto optimize_part_sizes(const Pattern & q, const Hypergraph & base, std::size_t n, const PartSizeOptions & options)
        -> PartSizeResult
    {
        const std::size_t m = base.order();
        if (m == 0)
            return {n == 0 ? count_inj(q, base) : Count(0), {}};
        const auto poly = build_poly(q, base);

        PartSizeResult best{0, balanced_parts(n, m)};
        best.best_count = blowup_count(poly, best.sizes);

        if (m <= options.exhaustive_parts || n <= options.exhaustive_n) {
            std::vector<std::size_t> sizes(m);
            bool first = true;
            auto visit = [&](const std::vector<std::size_t> & s) {
                auto c = blowup_count(poly, s);
                if (first || c > best.best_count) {
                    best = {c, s};
                    first = false;
                }
            };
            for_each_composition(n, m, sizes, 0, visit);
            return best;
        }

        auto climb = [&](std::vector<std::size_t> sizes) -> PartSizeResult {
            Count value = blowup_count(poly, sizes);
            while (true) {
                Count best_value = value;
                std::size_t best_from = m, best_to = m;
                for (std::size_t from = 0; from < m; ++from) {
                    if (sizes[from] == 0)
                        continue;
                    for (std::size_t to = 0; to < m; ++to) {
                        if (to == from)
                            continue;
                        --sizes[from];
                        ++sizes[to];
                        auto c = blowup_count(poly, sizes);
                        ++sizes[from];
                        --sizes[to];
                        if (c > best_value) {
                            best_value = c;
                            best_from = from;
                            best_to = to;
                        }
                    }
                }
                if (best_from == m)
                    return {value, sizes};
                --sizes[best_from];
                ++sizes[best_to];
                value = best_value;
            }
        };

        best = climb(best.sizes);
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> part(0, m - 1);
        for (std::size_t i = 0; i < options.restarts; ++i) {
            std::vector<std::size_t> sizes(m, 0);
            for (std::size_t u = 0; u < n; ++u)
                ++sizes[part(rng)];
            auto local = climb(std::move(sizes));
            if (local.best_count > best.best_count)
                best = std::move(local);
        }
        return best;
    }
}
