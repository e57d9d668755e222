#include "firetree/offline.hpp"

#include <algorithm>
#include <map>

#include "firetree/errors.hpp"
#include "firetree/simplex.hpp"

namespace firetree {

namespace {

std::vector<long long> integral_budgets(const RootedTree& t, const FirefighterSequence& f) {
    if (!f.integral()) throw InvalidInstance("integral oracle needs an integral sequence");
    std::vector<long long> budgets(static_cast<size_t>(t.height()) + 1, 0);
    for (int i = 1; i <= t.height(); ++i) budgets[static_cast<size_t>(i)] = f.at(i).get_num().get_si();
    return budgets;
}

struct ClassGroup {
    long long weight;
    std::vector<int> members;  // ascending ids
};

// Frontier grouped by subtree shape, heaviest class first.
std::vector<ClassGroup> group_frontier(const RootedTree& t, const std::vector<int>& frontier) {
    std::map<int, ClassGroup> by_class;
    for (int v : frontier) {
        auto& g = by_class[t.subtree_class(v)];
        g.weight = t.weight(v);
        g.members.push_back(v);
    }
    std::vector<ClassGroup> out;
    for (auto& [_, g] : by_class) {
        std::sort(g.members.begin(), g.members.end());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const ClassGroup& x, const ClassGroup& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        return x.members[0] < y.members[0];
    });
    return out;
}

struct BranchAndBound {
    const RootedTree& t;
    const std::vector<long long>& budgets;
    long long max_nodes;
    long long nodes = 0;
    long long best = -1;
    std::vector<std::vector<int>> best_picks, cur_picks;  // per turn

    void search(int turn, const std::vector<int>& frontier, long long saved) {
        if (++nodes > max_nodes) throw GuardExceeded("branch-and-bound node guard exceeded");
        if (frontier.empty() || turn > t.height()) {
            if (saved > best) {
                best = saved;
                best_picks = cur_picks;
            }
            return;
        }
        long long alive = 0;
        for (int v : frontier) alive += t.weight(v);
        if (saved + alive <= best) return;  // admissible bound

        long long units =
            std::min<long long>(budgets[static_cast<size_t>(turn)],
                                static_cast<long long>(frontier.size()));
        if (units == 0) {
            std::vector<int> next;
            for (int v : frontier)
                for (int c : t.children(v)) next.push_back(c);
            cur_picks.emplace_back();
            search(turn + 1, next, saved);
            cur_picks.pop_back();
            return;
        }
        std::vector<ClassGroup> groups = group_frontier(t, frontier);
        std::vector<long long> take(groups.size(), 0);
        pick_classes(turn, groups, take, 0, units, frontier, saved);
    }

    // Enumerates protection multisets over shape classes; protecting fewer
    // than min(budget, |frontier|) vertices is dominated, so exactly `units`
    // are placed. Larger takes from heavier classes explored first.
    void pick_classes(int turn, const std::vector<ClassGroup>& groups, std::vector<long long>& take,
                      size_t idx, long long remaining, const std::vector<int>& frontier,
                      long long saved) {
        if (remaining == 0 || idx == groups.size()) {
            if (remaining != 0) return;  // could not place every unit
            apply(turn, groups, take, frontier, saved);
            return;
        }
        long long room_after = 0;
        for (size_t j = idx + 1; j < groups.size(); ++j)
            room_after += static_cast<long long>(groups[j].members.size());
        long long hi = std::min<long long>(remaining,
                                           static_cast<long long>(groups[idx].members.size()));
        long long lo = std::max<long long>(0, remaining - room_after);
        for (long long x = hi; x >= lo; --x) {
            take[idx] = x;
            pick_classes(turn, groups, take, idx + 1, remaining - x, frontier, saved);
        }
        take[idx] = 0;
    }

    void apply(int turn, const std::vector<ClassGroup>& groups, const std::vector<long long>& take,
               const std::vector<int>& frontier, long long saved) {
        std::vector<int> picked;
        long long gain = 0;
        for (size_t i = 0; i < groups.size(); ++i)
            for (long long j = 0; j < take[i]; ++j) {
                picked.push_back(groups[i].members[static_cast<size_t>(j)]);
                gain += groups[i].weight;
            }
        std::sort(picked.begin(), picked.end());
        std::vector<int> next;
        for (int v : frontier)
            if (!std::binary_search(picked.begin(), picked.end(), v))
                for (int c : t.children(v)) next.push_back(c);
        cur_picks.push_back(picked);
        search(turn + 1, next, saved + gain);
        cur_picks.pop_back();
    }
};

Transcript picks_to_transcript(const std::vector<std::vector<int>>& picks) {
    Transcript tr;
    for (size_t i = 0; i < picks.size(); ++i) {
        if (picks[i].empty()) continue;
        TurnRecord rec;
        rec.turn = static_cast<int>(i) + 1;
        for (int v : picks[i]) rec.amounts.emplace_back(v, Rat(1));
        tr.push_back(std::move(rec));
    }
    return tr;
}

}  // namespace

OptResult beta_integral(const RootedTree& t, const FirefighterSequence& f,
                        const SearchLimits& lim) {
    if (t.vertex_count() > lim.max_vertices)
        throw GuardExceeded("tree exceeds the oracle vertex guard (" +
                            std::to_string(lim.max_vertices) + ")");
    std::vector<long long> budgets = integral_budgets(t, f);
    BranchAndBound bb{t, budgets, lim.max_nodes, 0, -1, {}, {}};
    std::vector<int> frontier = t.level(1);
    bb.best = -1;
    bb.search(1, frontier, 0);
    OptResult res;
    res.value = make_rat(bb.best < 0 ? 0 : bb.best);
    res.witness = picks_to_transcript(bb.best_picks);
    res.nodes_explored = bb.nodes;
    return res;
}

OptResult beta_fractional(const RootedTree& t, const FirefighterSequence& f) {
    int h = t.height();
    std::vector<int> var_of(static_cast<size_t>(t.vertex_count()), -1);
    std::vector<int> vert_of;
    for (int lvl = 1; lvl <= h; ++lvl)
        for (int v : t.level(lvl)) {
            var_of[static_cast<size_t>(v)] = static_cast<int>(vert_of.size());
            vert_of.push_back(v);
        }
    size_t n_vars = vert_of.size();
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int lvl = 1; lvl <= h; ++lvl) {
        std::vector<Rat> row(n_vars, Rat(0));
        for (int v : t.level(lvl)) row[static_cast<size_t>(var_of[static_cast<size_t>(v)])] = 1;
        a.push_back(std::move(row));
        b.push_back(f.at(lvl));
    }
    // Chain capacity: the leaf constraints dominate every ancestor's.
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (!t.children(v).empty()) continue;
        std::vector<Rat> row(n_vars, Rat(0));
        for (int u = v; u != t.root(); u = t.parent(u))
            row[static_cast<size_t>(var_of[static_cast<size_t>(u)])] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
    }
    std::vector<Rat> c;
    c.reserve(n_vars);
    for (int v : vert_of) c.push_back(make_rat(t.weight(v)));

    LpResult lp = solve_lp_max(a, b, c);
    OptResult res;
    res.value = lp.value;
    for (int lvl = 1; lvl <= h; ++lvl) {
        TurnRecord rec;
        rec.turn = lvl;
        for (int v : t.level(lvl)) {
            const Rat& x = lp.x[static_cast<size_t>(var_of[static_cast<size_t>(v)])];
            if (x != 0) rec.amounts.emplace_back(v, x);
        }
        if (!rec.amounts.empty()) res.witness.push_back(std::move(rec));
    }
    res.nodes_explored = lp.pivots;
    return res;
}

namespace {

// Heaviest vertex of T_lvl outside T[banned] (0 when none).
std::pair<long long, int> max_outside(const RootedTree& t, int lvl, int banned) {
    long long best = 0;
    int arg = -1;
    for (int u : t.level(lvl)) {
        if (t.in_subtree(banned, u)) continue;
        if (t.weight(u) > best || (t.weight(u) == best && arg >= 0 && u < arg)) {
            best = t.weight(u);
            arg = u;
        }
    }
    return {best, arg};
}

}  // namespace

OptResult bob_two(const RootedTree& t, const FirefighterSequence& f) {
    std::vector<long long> budgets = integral_budgets(t, f);
    long long total = 0;
    for (long long x : budgets) total += x;
    if (total > 2) throw InvalidInstance("bob_two needs a total budget of at most 2");

    int t1 = 0;
    for (int i = 1; i <= t.height(); ++i)
        if (budgets[static_cast<size_t>(i)] > 0) {
            t1 = i;
            break;
        }
    OptResult res;
    if (t1 == 0) return res;
    int t2 = budgets[static_cast<size_t>(t1)] == 2 ? t1 : 0;
    if (t2 == 0)
        for (int i = t1 + 1; i <= t.height(); ++i)
            if (budgets[static_cast<size_t>(i)] > 0) {
                t2 = i;
                break;
            }

    std::vector<int> order = t.level(t1);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (t.weight(u) != t.weight(v)) return t.weight(u) > t.weight(v);
        return u < v;
    });
    int a = order[0];
    int b = order.size() > 1 ? order[1] : order[0];

    long long best_val = -1;
    int best_first = a, best_second = -1;
    for (int v : {a, b}) {
        long long val = t.weight(v);
        int second = -1;
        if (t2 != 0 && t2 <= t.height()) {
            auto [w, arg] = max_outside(t, t2, v);
            val += w;
            second = arg;
        }
        if (val > best_val) {
            best_val = val;
            best_first = v;
            best_second = second;
        }
        if (a == b) break;
    }
    res.value = make_rat(best_val);
    TurnRecord first{t1, {{best_first, Rat(1)}}};
    res.witness.push_back(first);
    if (best_second >= 0) {
        if (t2 == t1)
            res.witness[0].amounts.emplace_back(best_second, Rat(1));
        else
            res.witness.push_back(TurnRecord{t2, {{best_second, Rat(1)}}});
        std::sort(res.witness[0].amounts.begin(), res.witness[0].amounts.end());
    }
    return res;
}

long long greedy_weight_value_int(const RootedTree& t, const std::vector<long long>& budgets) {
    std::vector<int> frontier = t.level(1);
    long long saved = 0;
    for (int turn = 1; turn <= t.height() && !frontier.empty(); ++turn) {
        long long units =
            turn < static_cast<int>(budgets.size()) ? budgets[static_cast<size_t>(turn)] : 0;
        std::sort(frontier.begin(), frontier.end(), [&](int u, int v) {
            if (t.weight(u) != t.weight(v)) return t.weight(u) > t.weight(v);
            return u < v;
        });
        size_t keep = static_cast<size_t>(std::min<long long>(
            units, static_cast<long long>(frontier.size())));
        std::vector<int> next;
        for (size_t i = 0; i < frontier.size(); ++i) {
            if (i < keep) {
                saved += t.weight(frontier[i]);
            } else {
                for (int c : t.children(frontier[i])) next.push_back(c);
            }
        }
        frontier = std::move(next);
    }
    return saved;
}

namespace {

void enum_budget_vectors(int slots, long long total,
                         const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> cur(static_cast<size_t>(slots), 0);
    std::function<void(int, long long)> rec = [&](int idx, long long left) {
        if (idx == slots) {
            fn(cur);
            return;
        }
        for (long long x = 0; x <= left; ++x) {
            cur[static_cast<size_t>(idx)] = x;
            rec(idx + 1, left - x);
        }
        cur[static_cast<size_t>(idx)] = 0;
    };
    rec(0, total);
}

Int binom(long long n, long long k) {
    Int r = 1;
    for (long long i = 1; i <= k; ++i) r = r * make_int(n - k + i) / make_int(i);
    return r;
}

}  // namespace

WorstCase worst_ratio(const RootedTree& t,
                      const std::function<std::unique_ptr<Strategy>()>& strategy_factory,
                      int budget, const AdversaryLimits& lim) {
    int h = t.height();
    if (binom(h + budget, budget) > make_int(lim.max_sequences))
        throw GuardExceeded("adversary enumeration exceeds the sequence guard");
    WorstCase worst;
    bool first = true;
    enum_budget_vectors(h, budget, [&](const std::vector<long long>& seq) {
        FirefighterSequence f = FirefighterSequence::explicit_list(make_rats(seq));
        auto strat = strategy_factory();
        Rat lambda = play_game(t, f, *strat, h).saved;
        Rat beta = beta_integral(t, f, lim.oracle).value;
        Rat ratio = competitive_ratio(lambda, beta);
        if (first || ratio < worst.ratio) {
            worst = WorstCase{ratio, seq, lambda, beta, std::nullopt};
            first = false;
        }
    });
    return worst;
}

WorstCase worst_ratio_two_budget(const RootedTree& t, FirstMoveRule rule) {
    int h = t.height();
    WorstCase worst;  // the all-zero sequence gives ratio 1
    worst.sequence.assign(static_cast<size_t>(h), 0);
    auto consider = [&](const Rat& lambda, const Rat& beta, int first_turn, int second_turn) {
        Rat ratio = competitive_ratio(lambda, beta);
        if (ratio < worst.ratio) {
            worst.ratio = ratio;
            worst.online_value = lambda;
            worst.offline_value = beta;
            worst.sequence.assign(static_cast<size_t>(h), 0);
            worst.sequence[static_cast<size_t>(first_turn - 1)] += 1;
            if (second_turn > 0) worst.sequence[static_cast<size_t>(second_turn - 1)] += 1;
        }
    };
    for (int shift = 0; shift < h; ++shift) {
        int turn1 = shift + 1;
        std::vector<int> level = t.level(turn1);
        std::vector<int> order = level;
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            if (t.weight(u) != t.weight(v)) return t.weight(u) > t.weight(v);
            return u < v;
        });
        int a = order[0];
        int b = order.size() > 1 ? order[1] : order[0];
        int choice = rule == FirstMoveRule::MaxWeight
                         ? a
                         : phi_first_choice(t, level, h - shift).chosen;

        // Single firefighter at turn1.
        consider(make_rat(t.weight(choice)), make_rat(t.weight(a)), turn1, 0);
        // Both at turn1.
        {
            long long lam = t.weight(choice) + max_outside(t, turn1, choice).first;
            long long bet = t.weight(a) + (b != a ? t.weight(b) : 0);
            consider(make_rat(lam), make_rat(bet), turn1, turn1);
        }
        // Second at a later turn.
        for (int turn2 = turn1 + 1; turn2 <= h; ++turn2) {
            long long lam = t.weight(choice) + max_outside(t, turn2, choice).first;
            long long bet = 0;
            for (int v : {a, b}) {
                bet = std::max(bet, t.weight(v) + max_outside(t, turn2, v).first);
                if (a == b) break;
            }
            consider(make_rat(lam), make_rat(bet), turn1, turn2);
        }
    }
    return worst;
}

}  // namespace firetree
