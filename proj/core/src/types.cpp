#include <xh/types.hpp>

#include <algorithm>

namespace xh
{
    auto to_string(Count value) -> std::string
    {
        if (value == 0)
            return "0";
        std::string out;
        while (value > 0) {
            out.push_back(char('0' + int(value % 10)));
            value /= 10;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    auto make_rational(Count num, Count den) -> Rational
    {
        if (den == 0)
            throw Error("rational with zero denominator");
        Count a = num, b = den;
        while (b != 0) {
            Count t = a % b;
            a = b;
            b = t;
        }
        if (a == 0)
            return {0, 1};
        return {num / a, den / a};
    }

    auto to_string(const Rational & value) -> std::string
    {
        if (value.is_integer())
            return to_string(value.num);
        return to_string(value.num) + "/" + to_string(value.den);
    }
}
