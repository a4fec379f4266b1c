#pragma once

#include <xh/homcount.hpp>
#include <xh/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace xh
{
    /// P_{Q,H}(X) = sum over phi in Hom(Q, H) of prod_{w in V(Q)} X_{phi(w)}.
    ///
    /// Monomials carry multiplicities (X_i^{|phi^{-1}(i)|}), so P is homogeneous
    /// of degree v(Q) and its coefficients sum to hom(Q, H).
    class LagrangePolynomial
    {
    public:
        struct Term
        {
            std::vector<std::uint32_t> exponents;
            Count coefficient;
        };

        /// Terms with equal exponent vectors are merged; zero coefficients dropped.
        LagrangePolynomial(std::size_t num_vars, std::size_t degree, std::vector<Term> terms);

        auto num_vars() const -> std::size_t { return num_vars_; }
        auto degree() const -> std::size_t { return degree_; }
        auto terms() const -> const std::vector<Term> & { return terms_; }
        auto is_zero() const -> bool { return terms_.empty(); }
        /// Sum of coefficients.
        auto mass() const -> Count;

        auto eval(std::span<const double> x) const -> double;
        auto gradient(std::span<const double> x) const -> std::vector<double>;

    private:
        struct Factor
        {
            std::uint32_t var;
            std::uint32_t exp;
        };

        std::size_t num_vars_;
        std::size_t degree_;
        std::vector<Term> terms_;
        std::vector<std::vector<Factor>> sparse_;
        std::vector<double> coef_;
    };

    /// A point of the probability simplex.
    struct SimplexPoint
    {
        std::vector<double> weights;

        static auto uniform(std::size_t m) -> SimplexPoint;
        static auto vertex(std::size_t m, std::size_t i) -> SimplexPoint;
        /// Throws Error on a negative entry or a sum off by more than 1e-12.
        void validate() const;
        auto support(double eps = 1e-9) const -> std::vector<std::size_t>;
    };

    /// Euclidean projection onto the probability simplex.
    auto project_to_simplex(std::span<const double> y) -> std::vector<double>;

    auto build_poly(const Pattern & q, const Hypergraph & host) -> LagrangePolynomial;
    auto eval_poly(const LagrangePolynomial & p, const SimplexPoint & x) -> double;
    auto grad_poly(const LagrangePolynomial & p, const SimplexPoint & x) -> std::vector<double>;

    struct OptimizeOptions
    {
        std::size_t restarts = 32;
        std::size_t max_iters = 10000;
        double tol = 1e-10;
        std::uint64_t seed = 0;
        std::size_t polish_iters = 2000;
    };

    struct OptimizeResult
    {
        double lambda;
        SimplexPoint x;
    };

    /// One multiplicative update x_i <- x_i D_iP(x) / (deg * P(x)).
    auto multiplicative_step(const LagrangePolynomial & p, const SimplexPoint & x) -> SimplexPoint;

    struct AscentRun
    {
        SimplexPoint x;
        /// P along the trajectory, starting with P(x0).
        std::vector<double> values;
    };

    /// Multiplicative ascent from x0 until the multiplier residual drops below
    /// tol or max_iters is reached. Throws NumericalError if P ever decreases
    /// beyond rounding or goes non-finite.
    auto multiplicative_ascent(const LagrangePolynomial & p, SimplexPoint x0, std::size_t max_iters, double tol) -> AscentRun;

    /// Best (value, point) over restarts: the uniform point plus Dirichlet(1)
    /// starts, each run by multiplicative ascent and polished by projected
    /// gradient with Armijo backtracking. The zero polynomial gives (0, uniform).
    auto maximize_on_simplex(const LagrangePolynomial & p, const OptimizeOptions & options = {}) -> OptimizeResult;

    /// max over i in Supp(x) of |D_iP(x) - deg * P(x)|.
    auto multiplier_residual(const LagrangePolynomial & p, const SimplexPoint & x, double support_eps = 1e-9) -> double;

    /// min_i x_i >= eps.
    auto full_support_check(const LagrangePolynomial & p, const SimplexPoint & x, double eps) -> bool;

    /// sum over terms of coef * prod_i (sizes[i])_{e_i}: inj(Q, G(V_1..V_m))
    /// read off the polynomial of (Q, G).
    auto blowup_count(const LagrangePolynomial & p, std::span<const std::size_t> sizes) -> Count;

    struct PartSizeOptions
    {
        std::size_t restarts = 16;
        std::uint64_t seed = 0;
        /// Exhaustive search when v(base) <= this or n <= exhaustive_n.
        std::size_t exhaustive_parts = 3;
        std::size_t exhaustive_n = 12;
    };

    struct PartSizeResult
    {
        Count best_count;
        std::vector<std::size_t> sizes;
    };

    /// Maximizes inj(Q, base(V_1..V_m)) over compositions of n into v(base) parts.
    auto optimize_part_sizes(const Pattern & q, const Hypergraph & base, std::size_t n, const PartSizeOptions & options = {})
        -> PartSizeResult;
}
