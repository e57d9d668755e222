#include "firetree/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "firetree/errors.hpp"

namespace firetree {

RootedTree RootedTree::from_parent_pairs(const std::vector<std::pair<int, int>>& child_parent,
                                         int root) {
    int n = static_cast<int>(child_parent.size()) + 1;
    RootedTree t;
    t.n_ = n;
    t.parent_.assign(n, -2);
    if (root < 0 || root >= n) throw InvalidInstance("root id out of range");
    t.parent_[root] = -1;
    for (auto [c, p] : child_parent) {
        if (c < 0 || c >= n || p < 0 || p >= n)
            throw InvalidInstance("vertex id out of range in edge list");
        if (c == root) throw InvalidInstance("root listed with a parent");
        if (t.parent_[c] != -2) throw InvalidInstance("duplicate parent for vertex " +
                                                      std::to_string(c));
        if (c == p) throw InvalidInstance("self-loop at vertex " + std::to_string(c));
        t.parent_[c] = p;
    }
    for (int v = 0; v < n; ++v)
        if (t.parent_[v] == -2) throw InvalidInstance("vertex " + std::to_string(v) +
                                                      " has no parent and is not the root");
    t.finish(root);
    return t;
}

void RootedTree::finish(int root) {
    root_ = root;
    int n = n_;
    children_.assign(n, {});
    for (int v = 0; v < n; ++v)
        if (v != root) children_[parent_[v]].push_back(v);
    for (auto& c : children_) std::sort(c.begin(), c.end());

    // Levels by BFS; a leftover vertex means a cycle / disconnection.
    level_of_.assign(n, -1);
    levels_.clear();
    std::vector<int> frontier{root};
    level_of_[root] = 0;
    int seen = 0;
    while (!frontier.empty()) {
        levels_.push_back(frontier);
        seen += static_cast<int>(frontier.size());
        std::vector<int> next;
        for (int v : frontier)
            for (int c : children_[v]) {
                level_of_[c] = level_of_[v] + 1;
                next.push_back(c);
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (seen != n) throw InvalidInstance("edge list contains a cycle or unreachable vertex");

    weight_.assign(n, 1);
    subtree_height_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    shape_class_.assign(n, 0);
    std::map<std::vector<int>, int> interned;
    int timer = 0;
    // Iterative post-order: weights, heights, Euler intervals, shape classes.
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    tin_[root] = timer++;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < children_[v].size()) {
            int c = children_[v][idx++];
            tin_[c] = timer++;
            stack.emplace_back(c, 0);
        } else {
            tout_[v] = timer++;
            std::vector<int> sig;
            for (int c : children_[v]) {
                weight_[v] += weight_[c];
                subtree_height_[v] = std::max(subtree_height_[v], subtree_height_[c] + 1);
                sig.push_back(shape_class_[c]);
            }
            std::sort(sig.begin(), sig.end());
            auto [it, _] = interned.emplace(std::move(sig), static_cast<int>(interned.size()));
            shape_class_[v] = it->second;
            stack.pop_back();
        }
    }
}

const std::vector<int>& RootedTree::level(int i) const {
    static const std::vector<int> empty;
    if (i < 0) throw InvalidInstance("negative level index");
    if (i >= static_cast<int>(levels_.size())) return empty;
    return levels_[i];
}

long long RootedTree::max_weight_at_level(int v, int lvl) const {
    if (lvl < level_of_[v]) throw InvalidInstance("level above the vertex");
    if (lvl > level_of_[v] + subtree_height_[v]) return 0;
    long long best = 0;
    // Scan T[v] restricted to lvl via the Euler interval.
    for (int u : level(lvl))
        if (in_subtree(v, u)) best = std::max(best, weight_[u]);
    return best;
}

RootedTree RootedTree::contract_levels(int k) const {
    if (k < 0 || k > height()) throw InvalidInstance("contraction depth exceeds height");
    std::vector<int> new_id(n_, -1);
    int next = 1;
    for (int lvl = k + 1; lvl <= height(); ++lvl)
        for (int v : levels_[lvl]) new_id[v] = 0;  // mark survivor
    for (int v = 0; v < n_; ++v)
        if (new_id[v] == 0) new_id[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n_; ++v) {
        if (new_id[v] <= 0) continue;
        int p = parent_[v];
        edges.emplace_back(new_id[v], level_of_[p] <= k ? 0 : new_id[p]);
    }
    RootedTree out = from_parent_pairs(edges, 0);
    out.family_ = family_.empty() ? "" : family_ + ".contract(" + std::to_string(k) + ")";
    return out;
}

namespace {

RootedTree from_parent_vector(const std::vector<int>& parent, int root, std::string family) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        if (v != root) edges.emplace_back(v, parent[v]);
    RootedTree t = RootedTree::from_parent_pairs(edges, root);
    t.set_family(std::move(family));
    return t;
}

}  // namespace

RootedTree make_path(int n) {
    if (n < 1) throw InvalidInstance("path needs at least one vertex");
    std::vector<int> parent(n);
    for (int v = 1; v < n; ++v) parent[v] = v - 1;
    return from_parent_vector(parent, 0, "path(" + std::to_string(n) + ")");
}

RootedTree make_perfect_binary(int height) {
    if (height < 0) throw InvalidInstance("negative height");
    int n = (1 << (height + 1)) - 1;
    std::vector<int> parent(n);
    for (int v = 1; v < n; ++v) parent[v] = (v - 1) / 2;
    return from_parent_vector(parent, 0, "perfect_binary(" + std::to_string(height) + ")");
}

RootedTree make_star(int leaves) {
    if (leaves < 0) throw InvalidInstance("negative leaf count");
    std::vector<int> parent(leaves + 1, 0);
    return from_parent_vector(parent, 0, "star(" + std::to_string(leaves) + ")");
}

RootedTree make_spider(int levels) {
    if (levels < 1) throw InvalidInstance("spider needs at least one level");
    // Level i has i+1 vertices; the lowest-id vertex of each level gets two
    // children, every other vertex gets one.
    std::vector<int> parent;
    parent.push_back(-1);
    std::vector<int> prev{0};
    int next = 1;
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::vector<int> cur;
        for (size_t j = 0; j < prev.size(); ++j) {
            int copies = j == 0 ? 2 : 1;
            for (int c = 0; c < copies; ++c) {
                parent.push_back(prev[j]);
                cur.push_back(next++);
            }
        }
        prev = std::move(cur);
    }
    return from_parent_vector(parent, 0, "spider(" + std::to_string(levels) + ")");
}

RootedTree make_random(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInstance("need at least one vertex");
    // Uniform attachment: vertex v picks its parent among 0..v-1. The raw
    // generator output is reduced directly so trees are identical across
    // standard libraries.
    std::mt19937_64 rng(seed);
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v) parent[v] = static_cast<int>(rng() % v);
    return from_parent_vector(parent, 0,
                              "random(" + std::to_string(n) + "," + std::to_string(seed) + ")");
}

RootedTree make_pincer(int chains, long long left, long long right) {
    if (chains < 1) throw InvalidInstance("pincer needs at least one chain");
    if (left < 2) throw InvalidInstance("pincer star branch needs at least two vertices");
    if (right < 1 + chains || (right - 1) % chains != 0)
        throw InvalidInstance("pincer requires chains | right-1");
    long long chain_len = (right - 1) / chains;
    long long n = 1 + left + right;
    if (n > 2'000'000) throw GuardExceeded("pincer instance too large");
    std::vector<int> parent(static_cast<size_t>(n), -1);
    // ids level by level: r=0; x=1, y=2; hub=3, chain heads 4..3+chains; then
    // the hub leaves followed by one vertex per chain on each deeper level.
    int x = 1, y = 2, hub = 3;
    parent[x] = 0;
    parent[y] = 0;
    parent[hub] = x;
    std::vector<int> chain_tail(chains);
    int next = 4;
    for (int c = 0; c < chains; ++c) {
        parent[next] = y;
        chain_tail[c] = next++;
    }
    for (long long leaf = 0; leaf < left - 2; ++leaf) parent[next++] = hub;
    for (long long pos = 2; pos <= chain_len; ++pos)
        for (int c = 0; c < chains; ++c) {
            parent[next] = chain_tail[c];
            chain_tail[c] = next++;
        }
    return from_parent_vector(parent, 0,
                              "pincer(" + std::to_string(chains) + "," + std::to_string(left) +
                                  "," + std::to_string(right) + ")");
}

}  // namespace firetree
