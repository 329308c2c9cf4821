#include <doctest.h>

#include "maxwist/errors.hpp"
#include "maxwist/rational.hpp"

using namespace maxwist;

TEST_CASE("make_rational reduces and normalizes sign") {
    auto r = make_rational(6, 8);
    CHECK(r.num == 3);
    CHECK(r.den == 4);

    r = make_rational(0, 7);
    CHECK(r.num == 0);
    CHECK(r.den == 1);

    r = make_rational(3, -6);
    CHECK(r.num == -1);
    CHECK(r.den == 2);

    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parse_decimal handles integers and fixed-point forms") {
    auto r = parse_decimal("0.25");
    CHECK(r.num == 1);
    CHECK(r.den == 4);

    r = parse_decimal("3");
    CHECK(r.num == 3);
    CHECK(r.den == 1);

    r = parse_decimal("0.5");
    CHECK(r.num == 1);
    CHECK(r.den == 2);

    r = parse_decimal("-1.5");
    CHECK(r.num == -3);
    CHECK(r.den == 2);

    r = parse_decimal("+0.750");
    CHECK(r.num == 3);
    CHECK(r.den == 4);

    r = parse_decimal(".4");
    CHECK(r.num == 2);
    CHECK(r.den == 5);
}

TEST_CASE("parse_decimal rejects malformed input") {
    for (const char* bad : {"", "-", "1.2.3", "1e3", "abc", "1 2"})
        CHECK_THROWS_AS(parse_decimal(bad), Error);
    try {
        parse_decimal("1.2.3");
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("to_string prints num/den") {
    CHECK(to_string(make_rational(3, 4)) == "3/4");
    CHECK(to_string(make_rational(0, 5)) == "0/1");
    CHECK(to_string(make_rational(-2, 6)) == "-1/3");
}

TEST_CASE("compare is exact across large cross products") {
    CHECK(compare({1, 3}, {1, 2}) == -1);
    CHECK(compare({2, 4}, {1, 2}) == 0);
    CHECK(compare({3, 4}, {2, 3}) == 1);
    // Values whose cross products overflow 64 bits.
    Rational big_a{4000000000000000000LL, 4000000000000000001LL};
    Rational big_b{3999999999999999999LL, 4000000000000000000LL};
    CHECK(compare(big_a, big_b) == 1);
    CHECK(compare(big_b, big_a) == -1);
}

TEST_CASE("ratio_at_least matches exact arithmetic") {
    CHECK(ratio_at_least(3, 4, make_rational(3, 4)));
    CHECK_FALSE(ratio_at_least(2, 4, make_rational(3, 4)));
    CHECK(ratio_at_least(0, 0, make_rational(3, 4))); // 0 >= 0
    CHECK(ratio_at_least(5, 0, make_rational(1, 2)));
    // Boundary: internal exactly bound * total.
    CHECK(ratio_at_least(9, 12, make_rational(3, 4)));
    CHECK_FALSE(ratio_at_least(8, 12, make_rational(3, 4)));
}
