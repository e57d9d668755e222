#include <doctest.h>

#include "firetree/errors.hpp"
#include "firetree/io.hpp"

using namespace firetree;

TEST_SUITE("io") {

TEST_CASE("tree files round-trip bit-exactly") {
    for (const RootedTree& t :
         {make_pincer(1, 10, 16), make_spider(4), make_random(12, 7), make_path(1)}) {
        std::string a = tree_to_json(t);
        RootedTree back = tree_from_json(a);
        std::string b = tree_to_json(back);
        CHECK(a == b);
        CHECK(back.vertex_count() == t.vertex_count());
        CHECK(back.height() == t.height());
        for (int v = 0; v < t.vertex_count(); ++v) CHECK(back.parent(v) == t.parent(v));
    }
}

TEST_CASE("tree parsing rejects malformed input") {
    CHECK_THROWS_AS(tree_from_json("{"), ParseError);
    CHECK_THROWS_AS(tree_from_json("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(tree_from_json("{\"n\": 3, \"root\": 0, \"parents\": [[1, 0]]}"), ParseError);
    CHECK_THROWS_AS(tree_from_json("{\"n\": 3, \"root\": 0, \"parents\": [[1, 2], [2, 1]]}"),
                    ParseError);
}

TEST_CASE("sequence files round-trip") {
    auto f = FirefighterSequence::explicit_list({Rat(1), Rat(3, 2), Rat(0)});
    std::string a = sequence_to_json(f);
    FirefighterSequence back = sequence_from_json(a);
    CHECK(back.kind() == FirefighterSequence::Kind::Explicit);
    CHECK(back.at(2) == Rat(3, 2));
    CHECK(sequence_to_json(back) == a);

    auto p = FirefighterSequence::periodic({Rat(1), Rat(0)});
    FirefighterSequence pback = sequence_from_json(sequence_to_json(p));
    CHECK(pback.kind() == FirefighterSequence::Kind::Periodic);
    CHECK(pback.at(3) == 1);

    auto r = FirefighterSequence::rule([](int) { return Rat(1); }, true, "ones");
    CHECK_THROWS_AS(sequence_to_json(r), ParseError);
    CHECK(sequence_to_json(r, 4).find("explicit") != std::string::npos);
}

TEST_CASE("identical runs serialize identically") {
    RootedTree t = make_random(10, 3);
    CHECK(tree_to_json(t) == tree_to_json(make_random(10, 3)));
    GreedyWeightStrategy g1, g2;
    FirefighterSequence f = FirefighterSequence::periodic({Rat(1), Rat(0)});
    GameOutcome a = play_game(t, f, g1), b = play_game(t, f, g2);
    CHECK(outcome_to_json(a, true) == outcome_to_json(b, true));
}

TEST_CASE("family specs cover finite and level trees") {
    CHECK(parse_family("path(5)").finite->vertex_count() == 5);
    CHECK(parse_family("star(4)").finite->vertex_count() == 5);
    CHECK(parse_family("perfect_binary(3)").finite->vertex_count() == 15);
    CHECK(parse_family("spider(4)").finite->height() == 4);
    CHECK(parse_family("random(12,7)").finite->vertex_count() == 12);
    CHECK(parse_family("pincer(1,10,16)").finite->vertex_count() == 27);
    CHECK(parse_family("spider_inf").level->level_size(3) == 4);
    CHECK(parse_family("width(2)").level->level_size(5) == 2);
    CHECK(parse_family("sst(2)").level->level_size(3) == 8);
    auto mixed = parse_family("sst(16,1,1,1;rest=2)");
    CHECK(mixed.level->level_size(5) == 32);
    CHECK_THROWS_AS(parse_family("blob(3)"), ParseError);
    CHECK_THROWS_AS(parse_family("path(5"), ParseError);
}

TEST_CASE("sequence specs") {
    CHECK(parse_sequence_spec("const:1").at(9) == 1);
    CHECK(parse_sequence_spec("periodic:1,0").at(3) == 1);
    CHECK(parse_sequence_spec("list:1,0,2").at(3) == 2);
    CHECK(parse_sequence_spec("list:3/2;rest=1").at(1) == Rat(3, 2));
    CHECK(parse_sequence_spec("list:1.5;rest=1").at(2) == 1);
    CHECK_FALSE(parse_sequence_spec("list:3/2;rest=1").integral());
    CHECK_THROWS_AS(parse_sequence_spec("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_sequence_spec("list:-1"), InvalidInstance);
}

TEST_CASE("strategy specs") {
    StrategyConfig c = parse_strategy_spec("linear_growth:C=2,n0=2");
    CHECK(c.name == "linear_growth");
    CHECK(c.params.at("C") == "2");
    CHECK(c.params.at("n0") == "2");
    StrategyConfig back = strategy_config_from_json(strategy_config_to_json(c));
    CHECK(back.name == c.name);
    CHECK(back.params == c.params);
    CHECK(parse_strategy_spec("gr").name == "gr");
}

TEST_CASE("witness serialization carries the certificate") {
    auto g = FirefighterSequence::prefix_then_constant({Rat(3, 2)}, Rat(1));
    SeparationWitness w = construct_separating(FirefighterSequence::constant(Rat(1)), g, 60);
    std::string json = separation_witness_to_json(w);
    CHECK(json.find("floor_f_over_F_plus_1") != std::string::npos);
    CHECK(json.find("\"N\": 3") != std::string::npos);
}

}  // TEST_SUITE
