#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xh
{
    using Vertex = std::uint32_t;

    /// Exact counts. inj(Q, H) overflows 64 bits around n = 40, v(Q) = 8.
    __extension__ typedef unsigned __int128 Count;

    auto to_string(Count value) -> std::string;

    /// Exact non-negative rational, always stored in lowest terms.
    struct Rational
    {
        Count num = 0;
        Count den = 1;

        auto is_integer() const -> bool { return den == 1; }
        auto to_double() const -> double { return static_cast<double>(num) / static_cast<double>(den); }
        auto operator==(const Rational &) const -> bool = default;
    };

    auto make_rational(Count num, Count den) -> Rational;
    auto to_string(const Rational & value) -> std::string;

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Raised when raw input violates a Hypergraph invariant.
    class ConstructionError : public Error
    {
    public:
        ConstructionError(const std::string & what, std::size_t edge_index) :
            Error(what), edge_index_(edge_index)
        {
        }

        auto edge_index() const -> std::size_t { return edge_index_; }

    private:
        std::size_t edge_index_;
    };

    /// Uniformity mismatch or a set of the wrong size.
    class ArityError : public Error
    {
    public:
        using Error::Error;
    };

    /// A search exhausted its node budget without deciding.
    class UndecidedError : public Error
    {
    public:
        using Error::Error;
    };

    /// Exhaustive generation refused because n exceeds the configured cap.
    class CapExceededError : public Error
    {
    public:
        using Error::Error;
    };

    class NumericalError : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(const std::string & source, std::size_t line, const std::string & message) :
            Error(source + ":" + std::to_string(line) + ": " + message), source_(source), line_(line)
        {
        }

        auto source() const -> const std::string & { return source_; }
        auto line() const -> std::size_t { return line_; }

    private:
        std::string source_;
        std::size_t line_;
    };
}
