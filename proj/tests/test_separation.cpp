#include <doctest.h>

#include <random>

#include <memory>

#include "firetree/errors.hpp"
#include "firetree/separation.hpp"
#include "firetree/strategies.hpp"

using namespace firetree;

namespace {

FirefighterSequence ones() { return FirefighterSequence::constant(Rat(1)); }

std::function<Int(int)> const_counts(long long a) {
    return [a](int) { return make_int(a); };
}

}  // namespace

TEST_SUITE("separation") {

TEST_CASE("fire recurrence on symmetric trees") {
    auto f3 = fire_recurrence(const_counts(3), ones(), 4);
    CHECK(f3 == std::vector<Rat>{Rat(1), Rat(2), Rat(5), Rat(14), Rat(41)});
    auto f2 = fire_recurrence(const_counts(2), ones(), 6);
    for (const Rat& v : f2) CHECK(v == 1);
    auto quick = fire_recurrence(const_counts(2),
                                 FirefighterSequence::explicit_list({Rat(2)}), 3);
    CHECK(quick[1] == 0);
    CHECK(containment_rank(quick) == 1);
    CHECK_FALSE(containment_rank(f2).has_value());
}

TEST_CASE("the targeting band comes from the two recurrences") {
    // f = 1,1,...  k = 1, eps = 1/2, degrees (2,2): A = 1/2, B = 1
    TargetBand band = containment_band({Int(2), Int(2)}, ones(), 1, Rat(1, 2));
    CHECK(band.lower == Rat(1, 2));
    CHECK(band.upper == 1);
    CHECK_THROWS_AS(containment_band({Int(2), Int(2)}, ones(), 1, Rat(0)), InvalidInstance);
    // eps = 1 empties the band's low edge
    TargetBand edge = containment_band({Int(2), Int(2)}, ones(), 1, Rat(1));
    CHECK(edge.lower == 0);
    CHECK(edge.upper == 1);
    // a prefix that already kills the weak fire is rejected
    CHECK_THROWS_AS(containment_band({Int(1), Int(1)}, FirefighterSequence::constant(Rat(2)), 1,
                                     Rat(1, 2)),
                    InvalidInstance);
}

TEST_CASE("band width identity") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 50; ++rep) {
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<Int> a;
        std::vector<Rat> fv;
        Rat fire = 1;
        for (int i = 1; i <= k + 1; ++i) {
            Rat f(static_cast<long>(rng() % 3));
            Int ai = rat_floor(f / fire) + 1 + static_cast<long>(rng() % 2);
            a.push_back(ai);
            fire = Rat(ai) * fire - f;
            fv.push_back(f);
        }
        if (fire <= 0) continue;
        Rat eps = Rat(static_cast<long>(1 + rng() % 4)) / 4;
        FirefighterSequence f = FirefighterSequence::explicit_list(fv).as_fractional();
        TargetBand band = containment_band(a, f, k, eps);
        CHECK(band.upper - band.lower == Rat(a[static_cast<size_t>(k)] - 1) * eps);
        CHECK(band.lower <= band.upper);
    }
}

TEST_CASE("single-divisor targeting on hand instances") {
    {
        TargetingInstance inst{Rat(1), Rat(3, 2), ones()};
        TargetingOutcome out = targeting_single_divisor(inst, 50);
        REQUIRE(out.won);
        CHECK(out.turn == 2);
        CHECK(out.divisors[0] == 2);
        CHECK(out.positions.back() == 1);
    }
    {
        // wide band: one move already meets the prefix-sum hypothesis
        TargetingInstance inst{Rat(1), Rat(3),
                               FirefighterSequence::explicit_list({Rat(2)}).as_fractional()};
        TargetingOutcome out = targeting_single_divisor(inst, 50);
        REQUIRE(out.won);
        CHECK(out.turn == 1);
        CHECK(out.divisors[0] == 1);
    }
    {
        TargetingInstance inst{Rat(1), Rat(3, 2), FirefighterSequence::constant(Rat(0))};
        TargetingOutcome out = targeting_single_divisor(inst, 50);
        CHECK_FALSE(out.won);
    }
}

TEST_CASE("greedy targeting on hand instances") {
    {
        TargetingInstance inst{Rat(3), Rat(4), FirefighterSequence::constant(Rat(4))};
        TargetingOutcome out = targeting_greedy(inst, 50);
        REQUIRE(out.won);
        CHECK(out.turn == 2);
        CHECK(out.divisors == std::vector<Int>{Int(2), Int(2)});
        CHECK(out.positions.back() == 3);
    }
    {
        TargetingInstance inst{Rat(3), Rat(4),
                               FirefighterSequence::explicit_list({Rat(7, 2)}).as_fractional()};
        TargetingOutcome out = targeting_greedy(inst, 50);
        REQUIRE(out.won);
        CHECK(out.turn == 1);
        CHECK(out.divisors[0] == 1);
    }
    {
        // one heavy move that undershoots, nothing afterwards
        TargetingInstance inst{Rat(3), Rat(4),
                               FirefighterSequence::explicit_list({Rat(9, 2)}).as_fractional()};
        TargetingOutcome out = targeting_greedy(inst, 50);
        CHECK_FALSE(out.won);
    }
}

TEST_CASE("greedy targeting keeps its monitor invariants") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 100; ++rep) {
        Rat a(static_cast<long>(1 + rng() % 8), 2);
        Rat b = a + Rat(static_cast<long>(1 + rng() % 8), 4);
        std::vector<Rat> moves;
        for (int i = 0; i < 20; ++i) moves.push_back(Rat(static_cast<long>(rng() % 6), 2));
        TargetingInstance inst{a, b,
                               FirefighterSequence::explicit_list(moves).as_fractional()};
        TargetingOutcome out = targeting_greedy(inst, 20);
        Rat prev_x = b;  // x_0 = B
        Rat prev_u = 0;
        Rat step = 1;
        for (size_t i = 0; i < out.monitor.size(); ++i) {
            CHECK(out.monitor[i] <= prev_x);
            CHECK(out.positions[i] >= prev_u);
            CHECK(out.positions[i] < b);
            step /= Rat(out.divisors[i]);
            Rat move = moves[i];
            if (move >= b) CHECK(b - out.positions[i] <= (b - prev_u) / 2);
            prev_x = out.monitor[i];
            prev_u = out.positions[i];
        }
    }
}

TEST_CASE("integral sequences separate at the first difference") {
    {
        auto g = FirefighterSequence::prefix_then_constant({Rat(2)}, Rat(1));
        SeparationWitness w = separate_integral(ones(), g, 40);
        CHECK(w.first_diff == 1);
        CHECK(w.rank == 1);
        CHECK(w.child_prefix == std::vector<Int>{Int(2)});
        CHECK_FALSE(w.swapped);
        CHECK(w.strong_fire_at_rank <= 0);
    }
    {
        auto g = FirefighterSequence::prefix_then_constant({Rat(1), Rat(2)}, Rat(1));
        SeparationWitness w = separate_integral(ones(), g, 40);
        CHECK(w.rank == 2);
    }
    {
        // swapped: the second sequence is the weaker one
        auto g = FirefighterSequence::prefix_then_constant({Rat(0)}, Rat(1));
        SeparationWitness w = separate_integral(ones(), g, 40);
        CHECK(w.swapped);
    }
    CHECK_THROWS_AS(separate_integral(ones(), ones(), 40), ConstructionFailure);
}

TEST_CASE("separating construction for the half-step example") {
    auto g = FirefighterSequence::prefix_then_constant({Rat(3, 2)}, Rat(1));
    SeparationWitness w = construct_separating(ones(), g, 60);
    CHECK(w.first_diff == 1);
    CHECK(w.method == "greedy");
    CHECK(w.rank == 3);
    CHECK(w.child_prefix == std::vector<Int>{Int(2), Int(2), Int(2)});
    // weak fire alive forever, strong fire dead by the rank
    SeparatingChildCounts counts(w.child_prefix, ones());
    for (int i = 1; i <= w.checked_to; ++i) CHECK(counts.fire_at(i) == 1);
    auto strong = fire_recurrence([&](int i) { return counts.at(i); }, g, w.rank);
    CHECK(strong[2] == 0);
    CHECK(w.strong_fire_at_rank <= 0);
}

TEST_CASE("a full integral step falls back to the prefix-only mode") {
    auto g = FirefighterSequence::prefix_then_constant({Rat(2)}, Rat(1));
    SeparationWitness w = construct_separating(ones(), g, 60);
    CHECK(w.method == "prefix_only");
    CHECK(w.rank == 2);
}

TEST_CASE("construction fails when no hypothesis holds") {
    auto f = FirefighterSequence::constant(Rat(0));
    auto g = FirefighterSequence::prefix_then_constant({Rat(1, 4)}, Rat(0));
    CHECK_THROWS_AS(construct_separating(f, g, 60), ConstructionFailure);
    CHECK_THROWS_AS(construct_separating(ones(), ones(), 60), ConstructionFailure);
    // not weaker: incomparable prefix sums
    auto a = FirefighterSequence::periodic({Rat(1), Rat(0)});
    auto b = FirefighterSequence::periodic({Rat(0), Rat(2)});
    CHECK_THROWS_AS(construct_separating(a, b, 60), InvalidInstance);
}

TEST_CASE("losing instance for doubling levels") {
    GrowthSequence doubling = [](int i) {
        Int t = 1;
        t <<= i;
        return t;
    };
    TailBound tail = [](int m) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r /= 2;
        return std::optional<Rat>(r);  // sum_{i>m} 2^-i = 2^-m
    };
    LosingWitness w = build_losing_instance(doubling, ones(), 50, tail);
    CHECK(w.tail_rank == 3);
    CHECK(w.start_rank == 4);
    REQUIRE(w.child_prefix.size() == 4);
    CHECK(w.child_prefix[0] == 16);
    CHECK(w.child_prefix[1] == 1);
    CHECK(w.child_prefix[3] == 1);
    auto counts = losing_child_counts(w, doubling);
    CHECK(counts(5) == 2);
    CHECK(counts(6) == 2);
    // level sizes equal t_i from the start rank on
    Int size = 1;
    for (int i = 1; i <= 50; ++i) {
        size *= counts(i);
        if (i >= w.start_rank) CHECK(size == doubling(i));
    }
    CHECK(w.burn_share_sum < 1);
    CHECK(Rat(1) - w.burn_share_sum >= Rat(1, 4));
}

TEST_CASE("harmonic growth is reported as divergent") {
    GrowthSequence linear = [](int i) { return make_int(i); };
    CHECK_THROWS_WITH_AS(build_losing_instance(linear, ones(), 2000, nullptr),
                         doctest::Contains("divergence"), ConstructionFailure);
}

TEST_CASE("the zero sequence is losing with any growth") {
    GrowthSequence linear = [](int i) { return make_int(i); };
    TailBound zero_tail = [](int) { return std::optional<Rat>(Rat(0)); };
    FirefighterSequence f = FirefighterSequence::constant(Rat(0));
    LosingWitness w = build_losing_instance(linear, f, 50, zero_tail);
    CHECK(w.tail_rank == 0);
    CHECK(w.start_rank == 1);
    CHECK(w.burn_share_sum == 0);
}


TEST_CASE("band membership characterizes separation on random prefixes") {
    // both directions of the interval condition: the shifted fire dies by
    // rank N while the plain fire survives iff the scaled partial sum of the
    // moves beyond k+1 lands in [A, B)
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int rep = 0; rep < 300 && checked < 60; ++rep) {
        int k = 1 + static_cast<int>(rng() % 2);
        int depth = k + 2 + static_cast<int>(rng() % 8);
        std::vector<Int> a;
        std::vector<Rat> fv;
        for (int i = 0; i < depth; ++i) {
            a.push_back(Int(1 + static_cast<long>(rng() % 3)));
            fv.push_back(Rat(static_cast<long>(rng() % 4)) / 2);
        }
        FirefighterSequence f = FirefighterSequence::explicit_list(fv).as_fractional();
        Rat eps = Rat(static_cast<long>(1 + rng() % 4)) / 4;
        std::vector<Int> head(a.begin(), a.begin() + k + 1);
        TargetBand band;
        try {
            band = containment_band(head, f, k, eps);
        } catch (const InvalidInstance&) {
            continue;
        }
        ++checked;

        // direct recurrences under f and the shifted stream
        std::vector<Rat> plain{Rat(1)}, shifted{Rat(1)};
        for (int i = 1; i <= depth; ++i) {
            Rat fi = f.at(i);
            Rat fs = fi;
            if (i == k) fs += eps;
            if (i == k + 1) fs -= eps;
            plain.push_back(Rat(a[static_cast<size_t>(i - 1)]) * plain.back() - fi);
            shifted.push_back(Rat(a[static_cast<size_t>(i - 1)]) * shifted.back() - fs);
        }
        bool separated = false;
        for (int n = k + 1; n <= depth; ++n)
            if (shifted[static_cast<size_t>(n)] <= 0 && plain[static_cast<size_t>(n)] > 0)
                separated = true;

        bool in_band = false;
        Rat partial = 0, scale = 1;
        if (band.lower <= 0 && 0 < band.upper) in_band = true;  // N = k+1 works
        for (int n = k + 2; n <= depth; ++n) {
            scale *= Rat(a[static_cast<size_t>(n - 1)]);
            partial += f.at(n) / scale;
            if (band.lower <= partial && partial < band.upper) in_band = true;
        }
        CHECK(separated == in_band);
    }
    CHECK(checked >= 60);
}

TEST_CASE("even spread containment matches the recurrence rank") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        int depth = 4 + static_cast<int>(rng() % 8);
        auto degrees = std::make_shared<std::vector<long long>>();
        long long width = 1;
        for (int i = 0; i < depth; ++i) {
            long long d = 1 + static_cast<long long>(rng() % 3);
            if (width * d > 1500) d = 1;
            width *= d;
            degrees->push_back(d);
        }
        std::vector<Rat> fv;
        for (int i = 0; i < depth; ++i) fv.push_back(Rat(static_cast<long>(rng() % 4)) / 2);
        FirefighterSequence f = FirefighterSequence::explicit_list(fv).as_fractional();

        auto fire = fire_recurrence(*degrees, f, depth);
        auto rank = containment_rank(fire);

        LevelTree lt = LevelTree::spherically_symmetric(
            [degrees](int i) { return (*degrees)[static_cast<size_t>(i - 1)]; }, "rand");
        EvenSpreadStrategy even;
        GameOutcome out = play_on_prefix(lt, f, even, depth);

        // share-sum crossing, the containment rank and the simulated end all
        // agree on spherically symmetric instances
        Rat share = 0;
        std::optional<int> crossing;
        long long sz = 1;
        for (int i = 1; i <= depth && !crossing; ++i) {
            sz *= (*degrees)[static_cast<size_t>(i - 1)];
            share += f.at(i) / make_rat(sz);
            if (share >= 1) crossing = i;
        }
        CHECK(crossing.has_value() == rank.has_value());
        if (crossing) CHECK(*crossing == *rank);
        CHECK(out.contained == rank.has_value());
        if (rank) CHECK(out.turns_played == *rank);
    }
}

}  // TEST_SUITE
