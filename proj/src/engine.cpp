#include "firetree/engine.hpp"

#include <algorithm>

#include "firetree/errors.hpp"

namespace firetree {

Rat Allocation::total() const {
    Rat t = 0;
    for (const auto& [v, a] : amounts) t += a;
    return t;
}

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::BudgetExceeded: return "BudgetExceeded";
        case ViolationKind::OverProtection: return "OverProtection";
        case ViolationKind::WrongLevel: return "WrongLevel";
        case ViolationKind::NonIntegral: return "NonIntegral";
        case ViolationKind::NegativeAmount: return "NegativeAmount";
    }
    return "?";
}

GameState::GameState(const RootedTree& t) {
    size_t n = static_cast<size_t>(t.vertex_count());
    own_.assign(n, Rat(0));
    anc_.assign(n, Rat(0));
    burn_.assign(n, Rat(0));
    burn_[static_cast<size_t>(t.root())] = 1;
}

Rat GameState::remaining_cap(int v) const {
    return Rat(1) - anc_[static_cast<size_t>(v)] - own_[static_cast<size_t>(v)];
}

std::optional<Violation> check_move(const GameState& s, const RootedTree& t, const Allocation& a,
                                    const Rat& budget, bool integral) {
    std::vector<std::pair<int, Rat>> amounts = a.amounts;
    std::sort(amounts.begin(), amounts.end());
    Rat total = 0;
    Rat on_vertex = 0;  // accumulated over duplicate entries for one vertex
    int prev = -1;
    for (const auto& [v, amt] : amounts) {
        if (amt < 0)
            return Violation{ViolationKind::NegativeAmount,
                             "amount " + rat_to_string(amt) + " on vertex " + std::to_string(v)};
        if (t.level_of(v) != s.turn())
            return Violation{ViolationKind::WrongLevel,
                             "vertex " + std::to_string(v) + " is at level " +
                                 std::to_string(t.level_of(v)) + ", turn is " +
                                 std::to_string(s.turn())};
        if (integral && !(amt == 0 || amt == 1))
            return Violation{ViolationKind::NonIntegral,
                             "amount " + rat_to_string(amt) + " in an integral game"};
        on_vertex = v == prev ? on_vertex + amt : amt;
        prev = v;
        if (on_vertex + s.own_protection(v) + s.ancestor_protection(v) > 1)
            return Violation{ViolationKind::OverProtection,
                             "vertex " + std::to_string(v) + " would exceed capacity 1"};
        total += amt;
    }
    if (total > budget)
        return Violation{ViolationKind::BudgetExceeded,
                         rat_to_string(total) + " placed with budget " + rat_to_string(budget)};
    return std::nullopt;
}

// Shared turn loop; `engine` gates access to GameState internals.
class Engine {
  public:
    static GameOutcome run(const RootedTree& t, const FirefighterSequence& f, Strategy& strat,
                           int horizon, const LevelTree* lt) {
        if (horizon < 0) horizon = t.height();
        if (lt == nullptr && horizon < t.height())
            throw InvalidInstance("horizon below the height of a finite tree");
        strat.start(t, lt);
        if (strat.offline()) strat.start_offline(f, horizon);

        GameState s(t);
        GameOutcome out;
        out.level_burn.emplace_back(1);
        bool integral = f.integral();
        int last = std::min(horizon, t.height());
        for (int turn = 1; turn <= last; ++turn) {
            s.turn_ = turn;
            const auto& level = t.level(turn);
            // P_p becomes known for the level the moment its turn starts.
            for (int v : level) {
                int p = t.parent(v);
                s.anc_[static_cast<size_t>(v)] =
                    s.anc_[static_cast<size_t>(p)] + s.own_[static_cast<size_t>(p)];
            }
            Rat budget = f.at(turn);
            strat.observe(turn, budget);
            Allocation move = strat.allocate(s, t, budget);
            std::sort(move.amounts.begin(), move.amounts.end());
            if (auto bad = check_move(s, t, move, budget, integral)) throw MoveViolation(*bad);
            for (const auto& [v, amt] : move.amounts) s.own_[static_cast<size_t>(v)] += amt;
            if (!move.amounts.empty())
                out.transcript.push_back(TurnRecord{turn, move.amounts});

            // Fire spread: b(v) = max(0, b(parent) - p(v)) on trees; b(parent)
            // already accounts for the whole ancestor chain.
            Rat mass = 0;
            for (int v : level) {
                Rat b = s.burn_[static_cast<size_t>(t.parent(v))] - s.own_[static_cast<size_t>(v)];
                if (b < 0) b = 0;
                s.burn_[static_cast<size_t>(v)] = b;
                mass += b;
            }
            s.mass_ = mass;
            out.level_burn.push_back(mass);
            out.turns_played = turn;
            if (mass == 0) {
                s.contained_ = true;
                break;
            }
        }
        out.contained = s.contained_ || t.height() == 0;
        for (const auto& rec : out.transcript)
            for (const auto& [v, amt] : rec.amounts) out.saved += amt * make_rat(t.weight(v));
        return out;
    }
};

Allocation ReplayStrategy::allocate(const GameState& s, const RootedTree&, const Rat&) {
    Allocation a;
    for (const auto& rec : transcript_)
        if (rec.turn == s.turn()) a.amounts = rec.amounts;
    return a;
}

GameOutcome play_game(const RootedTree& t, const FirefighterSequence& f, Strategy& strat,
                      int horizon) {
    return Engine::run(t, f, strat, horizon, nullptr);
}

GameOutcome play_on_prefix(const LevelTree& lt, const FirefighterSequence& f, Strategy& strat,
                           int horizon) {
    if (horizon < 1) throw InvalidInstance("a horizon is mandatory on level trees");
    RootedTree prefix = lt.prefix_tree(horizon);
    return Engine::run(prefix, f, strat, horizon, &lt);
}

Rat competitive_ratio(const Rat& saved, const Rat& opt) {
    if (opt == 0) {
        if (saved != 0) throw std::logic_error("saved exceeds the offline optimum");
        return 1;
    }
    if (opt < saved) throw std::logic_error("saved exceeds the offline optimum");
    return saved / opt;
}

}  // namespace firetree
