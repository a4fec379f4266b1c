#pragma once

#include <xh/types.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace xh
{
    /// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
    template <typename F>
    void for_each_subset(std::size_t n, std::size_t k, F && f)
    {
        if (k > n)
            return;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            f(std::span<const std::size_t>{pick});
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + (i - 1))
                --i;
            if (i == 0)
                return;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    /// C(n, k) as a real; C(n, k) = 0 for k < 0.
    inline auto binomial_real(double n, int k) -> double
    {
        if (k < 0)
            return 0.0;
        double out = 1.0;
        for (int i = 0; i < k; ++i)
            out = out * (n - i) / (i + 1);
        return out;
    }

    /// (a)_m = a (a - 1) ... (a - m + 1); zero once m > a.
    inline auto falling_factorial(std::size_t a, std::size_t m) -> Count
    {
        if (m > a)
            return 0;
        Count out = 1;
        for (std::size_t i = 0; i < m; ++i)
            out *= Count(a - i);
        return out;
    }

    inline auto power(Count base, std::size_t e) -> Count
    {
        Count out = 1;
        for (std::size_t i = 0; i < e; ++i)
            out *= base;
        return out;
    }
}
