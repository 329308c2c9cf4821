#pragma once

#include <string>

namespace maxwist {

// Exact non-negative fraction; denominator is always positive and the
// representation is kept reduced.
struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational make_rational(long long num, long long den);

// Parses a plain decimal like "0.25" or "3" into an exact fraction.
Rational parse_decimal(const std::string& text);

std::string to_string(const Rational& r);

// -1, 0, 1 as a < b, a == b, a > b. Exact (128-bit cross multiplication).
int compare(const Rational& a, const Rational& b);

// internal/total >= bound, exact; requires total >= 0.
bool ratio_at_least(long long internal, long long total, const Rational& bound);

} // namespace maxwist
