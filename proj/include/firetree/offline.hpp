#pragma once

#include <functional>
#include <optional>
#include <memory>
#include <vector>

#include "firetree/engine.hpp"
#include "firetree/strategies.hpp"

namespace firetree {

// Exact offline optimum with a replayable witness.
struct OptResult {
    Rat value = 0;
    Transcript witness;
    long long nodes_explored = 0;
};

struct SearchLimits {
    int max_vertices = 25;          // refuse larger trees unless raised
    long long max_nodes = 5'000'000;
};

// Exact integral optimum by depth-first branch and bound over per-turn
// protection sets. Frontier vertices with isomorphic subtrees are
// interchangeable, so branching runs over shape classes; the bound is the
// total weight of the still-protectable frontier.
OptResult beta_integral(const RootedTree& t, const FirefighterSequence& f,
                        const SearchLimits& lim = {});

// Exact fractional optimum: the relaxed protection program solved by
// exact-rational simplex.
OptResult beta_fractional(const RootedTree& t, const FirefighterSequence& f);

// Offline optimum for total budget <= 2: the first firefighter goes on one
// of the two heaviest frontier vertices, the second on the heaviest vertex
// still available when it arrives.
OptResult bob_two(const RootedTree& t, const FirefighterSequence& f);

// Fast integral greedy value (no engine, no rationals); mirrors
// GreedyWeightStrategy exactly and is property-tested against it.
long long greedy_weight_value_int(const RootedTree& t, const std::vector<long long>& budgets);

struct WorstCase {
    Rat ratio = 1;
    std::vector<long long> sequence;  // adversary witness, length h(t)
    Rat online_value = 0;
    Rat offline_value = 0;
    std::optional<Rat> fractional_value;  // filled by report emitters when cheap
};

struct AdversaryLimits {
    long long max_sequences = 2'000'000;
    SearchLimits oracle;
};

// Min over all integral sequences with sum <= budget and horizon h(t) of
// lambda(strategy)/beta_I, with the convention 1 when beta_I = 0.
WorstCase worst_ratio(const RootedTree& t,
                      const std::function<std::unique_ptr<Strategy>()>& strategy_factory,
                      int budget, const AdversaryLimits& lim = {});

// Closed-form sweep for budgets <= 2 usable on large instances: the online
// side plays `rule` for its first firefighter and a heaviest available
// vertex for the second; the offline side is bob_two.
enum class FirstMoveRule { PhiTest, MaxWeight };
WorstCase worst_ratio_two_budget(const RootedTree& t, FirstMoveRule rule);

}  // namespace firetree
