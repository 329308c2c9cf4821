#include "maxwist/rational.hpp"

#include <cctype>
#include <numeric>

#include "maxwist/errors.hpp"

namespace maxwist {

Rational make_rational(long long num, long long den) {
    if (den == 0)
        raise(ErrorCode::ParseError, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0)
        return {0, 1};
    return {num / g, den / g};
}

Rational parse_decimal(const std::string& text) {
    if (text.empty())
        raise(ErrorCode::ParseError, "empty decimal");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    } else if (text[i] == '+') {
        ++i;
    }
    long long num = 0;
    long long den = 1;
    bool any_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '.') {
            if (seen_dot)
                raise(ErrorCode::ParseError, "malformed decimal '" + text + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            raise(ErrorCode::ParseError, "malformed decimal '" + text + "'");
        if (num > (1000000000000000000LL - 9) / 10)
            raise(ErrorCode::ParseError, "decimal too large '" + text + "'");
        num = num * 10 + (ch - '0');
        if (seen_dot)
            den *= 10;
        any_digit = true;
    }
    if (!any_digit)
        raise(ErrorCode::ParseError, "malformed decimal '" + text + "'");
    return make_rational(neg ? -num : num, den);
}

std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int compare(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs)
        return -1;
    if (lhs > rhs)
        return 1;
    return 0;
}

bool ratio_at_least(long long internal, long long total, const Rational& bound) {
    // internal/total >= num/den  <=>  internal*den >= num*total (total, den >= 0)
    return static_cast<__int128>(internal) * bound.den >= static_cast<__int128>(bound.num) * total;
}

} // namespace maxwist
