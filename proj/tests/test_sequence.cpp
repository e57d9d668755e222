#include <doctest.h>

#include "firetree/errors.hpp"
#include "firetree/separation.hpp"
#include "firetree/sequence.hpp"

using namespace firetree;

TEST_SUITE("sequence") {

TEST_CASE("explicit lists end in zeros") {
    auto f = FirefighterSequence::explicit_list({Rat(1), Rat(0), Rat(2)});
    CHECK(f.at(1) == 1);
    CHECK(f.at(3) == 2);
    CHECK(f.at(4) == 0);
    CHECK(f.at(100) == 0);
    CHECK(f.integral());
    CHECK(f.prefix_sum(3) == 3);
    CHECK(f.prefix_sum(0) == 0);
}

TEST_CASE("periodic and constant") {
    auto f = FirefighterSequence::periodic({Rat(1), Rat(0)});
    CHECK(f.at(1) == 1);
    CHECK(f.at(2) == 0);
    CHECK(f.at(3) == 1);
    CHECK(f.prefix_sum(4) == 2);
    auto c = FirefighterSequence::constant(Rat(3, 2));
    CHECK(c.at(7) == Rat(3, 2));
    CHECK_FALSE(c.integral());
}

TEST_CASE("prefix then constant tail") {
    auto f = FirefighterSequence::prefix_then_constant({Rat(3, 2)}, Rat(1));
    CHECK(f.at(1) == Rat(3, 2));
    CHECK(f.at(2) == 1);
    CHECK(f.at(9) == 1);
    CHECK_FALSE(f.integral());
}

TEST_CASE("negative values are rejected") {
    CHECK_THROWS_AS(FirefighterSequence::explicit_list({Rat(-1)}), InvalidInstance);
    auto bad = FirefighterSequence::rule([](int) { return Rat(-1); }, false, "bad");
    CHECK_THROWS_AS(bad.at(1), InvalidInstance);
}

TEST_CASE("prefix sums never decrease") {
    auto f = FirefighterSequence::periodic({Rat(2), Rat(0), Rat(1, 2)});
    Rat prev = 0;
    for (int i = 1; i <= 30; ++i) {
        CHECK(f.prefix_sum(i) >= prev);
        prev = f.prefix_sum(i);
    }
}

TEST_CASE("comparison classifies domination of prefix sums") {
    auto ones = FirefighterSequence::constant(Rat(1));
    auto bigger = FirefighterSequence::prefix_then_constant({Rat(3, 2)}, Rat(1));
    CHECK(compare_sequences(ones, bigger, 50) == SeqOrder::StrictlyWeaker);
    CHECK(compare_sequences(ones, ones, 50) == SeqOrder::Weaker);
    auto a = FirefighterSequence::periodic({Rat(1), Rat(0)});
    auto b = FirefighterSequence::periodic({Rat(0), Rat(2)});
    CHECK(compare_sequences(a, b, 10) == SeqOrder::IncomparableOnPrefix);
}

}  // TEST_SUITE
