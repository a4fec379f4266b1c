#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace xh::detail
{
    /// Fixed-length bitset sized at runtime; hosts are small, so word loops are fine.
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t n, bool fill = false) :
            n_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0)
        {
            if (fill)
                trim();
        }

        auto size() const -> std::size_t { return n_; }
        auto test(std::size_t i) const -> bool { return (words_[i >> 6] >> (i & 63)) & 1U; }
        void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
        void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

        auto operator&=(const Bitset & o) -> Bitset &
        {
            for (std::size_t w = 0; w < words_.size(); ++w)
                words_[w] &= o.words_[w];
            return *this;
        }

        void and_not(const Bitset & o)
        {
            for (std::size_t w = 0; w < words_.size(); ++w)
                words_[w] &= ~o.words_[w];
        }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : words_)
                c += std::size_t(std::popcount(w));
            return c;
        }

        auto any() const -> bool
        {
            for (auto w : words_)
                if (w)
                    return true;
            return false;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t w = 0; w < words_.size(); ++w) {
                auto bits = words_[w];
                while (bits) {
                    std::size_t i = (w << 6) + std::size_t(std::countr_zero(bits));
                    bits &= bits - 1;
                    f(i);
                }
            }
        }

        /// Like for_each but the callback returns false to stop early.
        template <typename F>
        auto for_each_until(F && f) const -> bool
        {
            for (std::size_t w = 0; w < words_.size(); ++w) {
                auto bits = words_[w];
                while (bits) {
                    std::size_t i = (w << 6) + std::size_t(std::countr_zero(bits));
                    bits &= bits - 1;
                    if (! f(i))
                        return false;
                }
            }
            return true;
        }

        auto operator==(const Bitset &) const -> bool = default;

    private:
        void trim()
        {
            if (n_ % 64 != 0 && ! words_.empty())
                words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
        }

        std::size_t n_ = 0;
        std::vector<std::uint64_t> words_;
    };
}
