#include <doctest.h>

#include "firetree/errors.hpp"
#include "firetree/level_tree.hpp"

using namespace firetree;

TEST_SUITE("level_tree") {

TEST_CASE("spherically symmetric level sizes are degree products") {
    LevelTree t = LevelTree::spherically_symmetric([](int) { return 2; }, "sst(2)");
    CHECK(t.level_size(3) == 8);
    CHECK(t.level_size(0) == 1);

    std::vector<long long> a{16, 1, 1, 1, 2};
    LevelTree s = LevelTree::spherically_symmetric(
        [a](int i) { return i <= 5 ? a[static_cast<size_t>(i - 1)] : 2; }, "sst-mixed");
    CHECK(s.level_size(5) == 32);
    long long prod = 1;
    for (int i = 1; i <= 5; ++i) {
        prod *= a[static_cast<size_t>(i - 1)];
        CHECK(s.level_size(i) == prod);
    }
}

TEST_CASE("materialization is monotone") {
    LevelTree t = LevelTree::spider();
    t.materialize(3);
    std::vector<int> parents;
    for (long long v = 0; v < t.vertex_count(); ++v) parents.push_back(t.parent(v));
    t.materialize(6);
    for (long long v = 0; v < static_cast<long long>(parents.size()); ++v)
        CHECK(t.parent(v) == parents[static_cast<size_t>(v)]);
    for (int i = 0; i <= 6; ++i) CHECK(t.level_size(i) == i + 1);
}

TEST_CASE("prefix tree uses the level tree ids") {
    LevelTree t = LevelTree::spherically_symmetric([](int) { return 2; }, "sst(2)");
    RootedTree p = t.prefix_tree(3);
    CHECK(p.vertex_count() == 15);
    CHECK(p.height() == 3);
    for (long long v = 1; v < p.vertex_count(); ++v)
        CHECK(p.parent(static_cast<int>(v)) == t.parent(v));
}

TEST_CASE("constant width tree") {
    LevelTree t = LevelTree::constant_width(2);
    for (int i = 1; i <= 10; ++i) CHECK(t.level_size(i) == 2);
}

TEST_CASE("pruning removes grafted dead branches") {
    // Binary tree, but one level-2 vertex gets an extra child that dies out.
    auto rule = [](int level, long long idx) -> long long {
        if (level == 3 && idx == 0) return 3;  // one extra doomed child
        if (level == 4 && idx == 0) return 0;  // the graft ends here
        return 2;
    };
    // careful: idx 0 of level 4 is the graft only if children order puts it
    // first; the graft is the extra child of vertex 0 of level 2.
    LevelTree t = LevelTree::from_rule(rule, "grafted");
    LevelTree pruned = t.pruned_leafless(5);
    CHECK(pruned.level_size(3) == t.level_size(3) - 1);
    // Level sizes of a leafless prefix never decrease.
    long long prev = 1;
    for (int i = 0; i <= 5; ++i) {
        CHECK(pruned.level_size(i) >= prev);
        prev = pruned.level_size(i);
    }
}

TEST_CASE("pruning a spherically symmetric prefix changes nothing") {
    LevelTree t = LevelTree::spherically_symmetric([](int) { return 2; }, "sst(2)");
    LevelTree pruned = t.pruned_leafless(4);
    for (int i = 0; i <= 4; ++i) CHECK(pruned.level_size(i) == t.level_size(i));
}

TEST_CASE("pruning a path prefix changes nothing") {
    LevelTree t = LevelTree::spherically_symmetric([](int) { return 1; }, "sst(1)");
    LevelTree pruned = t.pruned_leafless(4);
    for (int i = 0; i <= 4; ++i) CHECK(pruned.level_size(i) == 1);
}

TEST_CASE("vertex guard trips") {
    LevelTree t = LevelTree::spherically_symmetric([](int) { return 2; }, "sst(2)");
    t.set_vertex_guard(100);
    CHECK_THROWS_AS(t.materialize(20), GuardExceeded);
}

}  // TEST_SUITE
