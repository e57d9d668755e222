#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "firetree/tree.hpp"

namespace firetree {

// Locally finite infinite tree described level by level: a rule gives every
// vertex of level i-1 its number of children at level i. Vertices get dense
// ids in materialisation order, so extending the prefix never relabels it.
class LevelTree {
  public:
    // children(level, index_in_prev_level) -> child count, level >= 1.
    using ChildRule = std::function<long long(int level, long long index_in_prev)>;

    static LevelTree from_rule(ChildRule rule, std::string name);

    // Every vertex of level i-1 has a(i) children; carries the sequence so
    // the fire recurrence can be cross-checked against simulation.
    static LevelTree spherically_symmetric(std::function<long long(int)> a, std::string name);

    // |T_i| = i+1: one vertex per level has two children, the rest one.
    static LevelTree spider();

    // |T_i| = width for all i >= 1 (width chains below the root).
    static LevelTree constant_width(long long width);

    // Extends the cached prefix; monotone, never alters earlier levels.
    void materialize(int depth) const;
    int materialized_depth() const;
    long long vertex_count() const;  // in the materialized prefix

    long long level_size(int i) const;  // materializes up to i
    int parent(long long v) const;
    int level_of(long long v) const;

    // Finite view of the prefix with identical vertex ids; weights are
    // computed within the prefix.
    RootedTree prefix_tree(int depth) const;

    // Removes, within the materialized prefix, every vertex with no
    // descendant at `depth`. Throws ConstructionFailure when the root
    // cannot reach the boundary. Level sizes of the result are
    // non-decreasing.
    LevelTree pruned_leafless(int depth) const;

    bool is_spherically_symmetric() const { return static_cast<bool>(sym_rule_); }
    long long symmetric_child_count(int level) const;  // a_i when symmetric
    const std::string& name() const { return name_; }

    // Materialisation guard (vertex count).
    void set_vertex_guard(long long g) { vertex_guard_ = g; }

  private:
    struct Prefix {
        std::vector<int> parent;                         // by vertex id
        std::vector<std::pair<long long, long long>> level_range;  // [begin,end)
    };

    ChildRule rule_;
    std::function<long long(int)> sym_rule_;
    std::string name_;
    long long vertex_guard_ = 50'000'000;
    std::shared_ptr<Prefix> prefix_ = std::make_shared<Prefix>();
};

}  // namespace firetree
