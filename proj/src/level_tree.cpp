#include "firetree/level_tree.hpp"

#include <algorithm>

#include "firetree/errors.hpp"

namespace firetree {

LevelTree LevelTree::from_rule(ChildRule rule, std::string name) {
    if (!rule) throw InvalidInstance("null child rule");
    LevelTree t;
    t.rule_ = std::move(rule);
    t.name_ = std::move(name);
    t.prefix_->parent.push_back(-1);
    t.prefix_->level_range.emplace_back(0, 1);
    return t;
}

LevelTree LevelTree::spherically_symmetric(std::function<long long(int)> a, std::string name) {
    auto rule = [a](int level, long long) { return a(level); };
    LevelTree t = from_rule(rule, std::move(name));
    t.sym_rule_ = std::move(a);
    return t;
}

LevelTree LevelTree::spider() {
    return from_rule([](int, long long idx) { return idx == 0 ? 2 : 1; }, "spider");
}

LevelTree LevelTree::constant_width(long long width) {
    if (width < 1) throw InvalidInstance("width must be positive");
    return spherically_symmetric([width](int level) { return level == 1 ? width : 1; },
                                 "constant_width(" + std::to_string(width) + ")");
}

void LevelTree::materialize(int depth) const {
    Prefix& p = *prefix_;
    while (static_cast<int>(p.level_range.size()) - 1 < depth) {
        int level = static_cast<int>(p.level_range.size());
        auto [begin, end] = p.level_range.back();
        long long first = static_cast<long long>(p.parent.size());
        for (long long v = begin; v < end; ++v) {
            long long c = rule_(level, v - begin);
            if (c < 0) throw InvalidInstance("negative child count from rule");
            if (sym_rule_ && c < 1)
                throw InvalidInstance("spherically symmetric tree needs a_i >= 1");
            for (long long j = 0; j < c; ++j) p.parent.push_back(static_cast<int>(v));
            if (static_cast<long long>(p.parent.size()) > vertex_guard_)
                throw GuardExceeded("level tree prefix exceeds vertex guard");
        }
        long long last = static_cast<long long>(p.parent.size());
        if (last == first)
            throw ConstructionFailure("tree is finite: level " + std::to_string(level) +
                                      " is empty");
        p.level_range.emplace_back(first, last);
    }
}

int LevelTree::materialized_depth() const {
    return static_cast<int>(prefix_->level_range.size()) - 1;
}

long long LevelTree::vertex_count() const {
    return static_cast<long long>(prefix_->parent.size());
}

long long LevelTree::level_size(int i) const {
    if (i < 0) throw InvalidInstance("negative level");
    materialize(i);
    auto [b, e] = prefix_->level_range[i];
    return e - b;
}

int LevelTree::parent(long long v) const { return prefix_->parent[static_cast<size_t>(v)]; }

int LevelTree::level_of(long long v) const {
    const auto& lr = prefix_->level_range;
    auto it = std::upper_bound(lr.begin(), lr.end(), v,
                               [](long long x, const auto& r) { return x < r.second; });
    return static_cast<int>(it - lr.begin());
}

RootedTree LevelTree::prefix_tree(int depth) const {
    materialize(depth);
    auto [b, e] = prefix_->level_range[depth];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(e) - 1);
    for (long long v = 1; v < e; ++v)
        edges.emplace_back(static_cast<int>(v), prefix_->parent[static_cast<size_t>(v)]);
    RootedTree t = RootedTree::from_parent_pairs(edges, 0);
    t.set_family(name_ + ".prefix(" + std::to_string(depth) + ")");
    return t;
}

long long LevelTree::symmetric_child_count(int level) const {
    if (!sym_rule_) throw InvalidInstance("tree is not spherically symmetric");
    return sym_rule_(level);
}

LevelTree LevelTree::pruned_leafless(int depth) const {
    materialize(depth);
    const Prefix& p = *prefix_;
    auto [db, de] = p.level_range[depth];
    std::vector<char> keep(p.parent.size(), 0);
    for (long long v = db; v < de; ++v) keep[static_cast<size_t>(v)] = 1;
    for (int lvl = depth; lvl >= 1; --lvl) {
        auto [b, e] = p.level_range[lvl];
        for (long long v = b; v < e; ++v)
            if (keep[static_cast<size_t>(v)]) keep[p.parent[static_cast<size_t>(v)]] = 1;
    }
    if (!keep[0]) throw ConstructionFailure("no branch reaches the requested depth");

    // Snapshot the pruned prefix into an explicit child-count table.
    auto counts = std::make_shared<std::vector<std::vector<long long>>>();
    counts->resize(static_cast<size_t>(depth) + 1);
    std::vector<long long> kept_index(p.parent.size(), -1);
    for (int lvl = 0; lvl <= depth; ++lvl) {
        auto [b, e] = p.level_range[lvl];
        long long idx = 0;
        for (long long v = b; v < e; ++v)
            if (keep[static_cast<size_t>(v)]) kept_index[static_cast<size_t>(v)] = idx++;
    }
    for (int lvl = 1; lvl <= depth; ++lvl) {
        auto [pb, pe] = p.level_range[lvl - 1];
        long long kept_prev = 0;
        for (long long v = pb; v < pe; ++v)
            if (keep[static_cast<size_t>(v)]) ++kept_prev;
        (*counts)[static_cast<size_t>(lvl)].assign(static_cast<size_t>(kept_prev), 0);
        auto [b, e] = p.level_range[lvl];
        for (long long v = b; v < e; ++v)
            if (keep[static_cast<size_t>(v)]) {
                long long pi = kept_index[p.parent[static_cast<size_t>(v)]];
                ++(*counts)[static_cast<size_t>(lvl)][static_cast<size_t>(pi)];
            }
    }
    auto rule = [counts, depth](int level, long long idx) -> long long {
        if (level > depth) throw GuardExceeded("pruned prefix only extends to its snapshot depth");
        return (*counts)[static_cast<size_t>(level)][static_cast<size_t>(idx)];
    };
    return from_rule(rule, name_ + ".pruned(" + std::to_string(depth) + ")");
}

}  // namespace firetree
