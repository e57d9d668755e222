#include <doctest.h>

#include "firetree/rational.hpp"
#include "firetree/errors.hpp"

using namespace firetree;

TEST_SUITE("rational") {

TEST_CASE("parsing accepts integers, fractions and decimals") {
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string("-3/4") == Rat(-3, 4));
    CHECK(rat_from_string("1.5") == Rat(3, 2));
    CHECK(rat_from_string("0.25") == Rat(1, 4));
    CHECK(rat_from_string("-0.5") == Rat(-1, 2));
    CHECK(rat_from_string("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("formatting is canonical num/den") {
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(4)) == "4/1");
    CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
    CHECK(rat_to_decimal(Rat(1, 3), 4) == "0.3333");
    CHECK(rat_to_decimal(Rat(-5, 2), 2) == "-2.50");
}

TEST_CASE("floor and ceil") {
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
    CHECK(rat_floor(Rat(4)) == 4);
    CHECK(rat_ceil(Rat(4)) == 4);
}

TEST_CASE("golden ratio certificate") {
    // 1/phi = 0.618033988...; 618/1000 below, 619/1000 above.
    CHECK(cmp_inv_phi(Rat(618, 1000)) < 0);
    CHECK(cmp_inv_phi(Rat(619, 1000)) > 0);
    CHECK(cmp_inv_phi(Rat(1)) > 0);
    // Fibonacci ratios straddle 1/phi: 8/13 < 1/phi < 13/21.
    CHECK(cmp_inv_phi(Rat(8, 13)) < 0);
    CHECK(cmp_inv_phi(Rat(13, 21)) > 0);
    CHECK(phi_certificate(Int(1002), Int(1645)) < 0);
}

}  // TEST_SUITE
