#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace firetree {

// Finite rooted tree with dense vertex ids 0..n-1. Levels, subtree weights
// and heights are precomputed at construction; the object is immutable
// afterwards and safe to share across threads.
class RootedTree {
  public:
    // Builds from (child, parent) pairs. Vertices are {0..n-1} with
    // n = pairs.size() + 1. Rejects duplicate parents, cycles and
    // disconnected vertices.
    static RootedTree from_parent_pairs(const std::vector<std::pair<int, int>>& child_parent,
                                        int root);

    int vertex_count() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }  // -1 for the root
    const std::vector<int>& children(int v) const { return children_[v]; }
    int level_of(int v) const { return level_of_[v]; }
    int height() const { return static_cast<int>(levels_.size()) - 1; }

    // Level i, ascending vertex ids; empty beyond the height.
    const std::vector<int>& level(int i) const;

    // Number of vertices of the subtree rooted at v (the vertex weight).
    long long weight(int v) const { return weight_[v]; }
    int subtree_height(int v) const { return subtree_height_[v]; }

    // Max weight among descendants of v lying at `lvl` (v itself when
    // lvl == level_of(v)); 0 when lvl exceeds level_of(v) + subtree height.
    // Throws InvalidInstance when lvl < level_of(v).
    long long max_weight_at_level(int v, int lvl) const;

    // Merges levels 0..k into a fresh root (id 0); children of the new root
    // are the old level-(k+1) vertices, weights of survivors unchanged.
    RootedTree contract_levels(int k) const;

    // True when `anc` is an ancestor of v or v itself.
    bool in_subtree(int anc, int v) const {
        return tin_[anc] <= tin_[v] && tout_[v] <= tout_[anc];
    }

    // Canonical id of the subtree shape rooted at v: two vertices share a
    // class iff their subtrees are isomorphic.
    int subtree_class(int v) const { return shape_class_[v]; }

    int degree(int v) const {
        return static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1);
    }

    // Optional description of how the tree was generated ("path(5)", ...).
    const std::string& family() const { return family_; }
    void set_family(std::string f) { family_ = std::move(f); }

  private:
    RootedTree() = default;
    void finish(int root);  // derive levels, weights, classes from parent_

    int n_ = 0;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> level_of_;
    std::vector<std::vector<int>> levels_;
    std::vector<long long> weight_;
    std::vector<int> subtree_height_;
    std::vector<int> tin_, tout_;
    std::vector<int> shape_class_;
    std::string family_;
};

// Instance families. All builders are deterministic for fixed parameters.
RootedTree make_path(int n);
RootedTree make_perfect_binary(int height);
RootedTree make_star(int leaves);
RootedTree make_spider(int levels);  // level i has i+1 vertices
RootedTree make_random(int n, std::uint64_t seed);

// Two-branch gadget: the root has a star branch of `left` vertices
// (x -> hub -> left-2 leaves) and a branch of `right` vertices made of
// `chains` equal chains hanging below a single vertex y.
// Requires chains >= 1, left >= 2 and chains | right-1.
RootedTree make_pincer(int chains, long long left, long long right);

}  // namespace firetree
