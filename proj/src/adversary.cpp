#include "firetree/adversary.hpp"

#include <algorithm>

#include "firetree/errors.hpp"

namespace firetree {

namespace {
bool enum_rec(std::vector<long long>& cur, size_t idx, long long left,
              const std::function<bool(const std::vector<long long>&)>& fn) {
    if (idx == cur.size()) return fn(cur);
    for (long long x = 0; x <= left; ++x) {
        cur[idx] = x;
        if (!enum_rec(cur, idx + 1, left - x, fn)) return false;
    }
    cur[idx] = 0;
    return true;
}
}  // namespace

void enum_sequences(int total, int horizon,
                    const std::function<bool(const std::vector<long long>&)>& fn) {
    if (total < 0 || horizon < 0) throw InvalidInstance("negative enumeration bounds");
    std::vector<long long> cur(static_cast<size_t>(horizon), 0);
    enum_rec(cur, 0, total, fn);
}

Int sequence_count(int total, int horizon) {
    Int r = 1;
    for (long long i = 1; i <= total; ++i) r = r * make_int(horizon + i) / make_int(i);
    return r;
}

std::vector<NamedSequence> pincer_fixture_sequences(int horizon) {
    auto pad = [&](std::vector<long long> v) {
        v.resize(static_cast<size_t>(horizon), 0);
        return v;
    };
    std::vector<NamedSequence> out;
    out.push_back({"single", pad({1})});
    out.push_back({"pair", pad({1, 1})});
    out.push_back({"alternating", pad({1, 0, 1})});
    out.push_back({"burst", pad({1, 0, 1, 1, 1})});
    return out;
}

Allocation ForcedFirstStrategy::allocate(const GameState& s, const RootedTree& t,
                                         const Rat& budget) {
    if (!rat_is_integer(budget) || budget < 0)
        throw InvalidInstance("forced-first strategy needs integral budgets");
    long long units = budget.get_num().get_si();
    Allocation a;
    std::vector<int> frontier;
    for (int v : t.level(s.turn()))
        if (s.remaining_cap(v) == 1) frontier.push_back(v);
    for (long long u = 0; u < units && !frontier.empty(); ++u) {
        int pick = -1;
        if (first_pending_) {
            auto it = std::find(frontier.begin(), frontier.end(), forced_);
            if (it == frontier.end())
                throw InvalidInstance("forced vertex is not available on the frontier");
            pick = forced_;
            first_pending_ = false;
        } else {
            for (int v : frontier)
                if (pick < 0 || t.weight(v) > t.weight(pick)) pick = v;
        }
        a.add(pick, 1);
        frontier.erase(std::find(frontier.begin(), frontier.end(), pick));
    }
    return a;
}

FirstMoveReport pincer_first_move_report(const RootedTree& pincer,
                                         const std::vector<NamedSequence>& sequences,
                                         const SearchLimits& oracle_limits) {
    // make_pincer assigns the star branch id 1 and the chains branch id 2.
    if (pincer.family().rfind("pincer(", 0) != 0)
        throw InvalidInstance("first-move report expects a pincer-family tree");
    int x = 1, y = 2;

    FirstMoveReport report;
    bool first_x = true, first_y = true;
    for (const auto& [label, vertex] : {std::pair<std::string, int>{"x", x}, {"y", y}}) {
        for (const NamedSequence& ns : sequences) {
            FirefighterSequence f = FirefighterSequence::explicit_list(make_rats(ns.values));
            ForcedFirstStrategy strat(vertex);
            Rat lambda = play_game(pincer, f, strat).saved;
            Rat beta = beta_integral(pincer, f, oracle_limits).value;
            FirstMoveRow row{label, ns.name, ns.values, lambda, beta,
                             competitive_ratio(lambda, beta)};
            if (label == "x") {
                if (first_x || row.ratio < report.worst_ratio_x) report.worst_ratio_x = row.ratio;
                first_x = false;
            } else {
                if (first_y || row.ratio < report.worst_ratio_y) report.worst_ratio_y = row.ratio;
                first_y = false;
            }
            report.rows.push_back(std::move(row));
        }
    }
    report.best_online = std::max(report.worst_ratio_x, report.worst_ratio_y);
    return report;
}

}  // namespace firetree
