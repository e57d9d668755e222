#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "firetree/engine.hpp"

namespace firetree {

// Weight greedy: per turn an optimal solution of the one-level program
// (order the level by non-increasing weight, water-fill against the budget
// and the ancestor-chain caps). Online, valid for both game variants.
class GreedyWeightStrategy : public Strategy {
  public:
    std::string name() const override { return "gr"; }
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;
};

// Degree greedy, the classical negative control: protects the available
// level vertices of largest degree. Integral sequences only.
class DegreeGreedyStrategy : public Strategy {
  public:
    std::string name() const override { return "degree"; }
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;
};

// First-firefighter rule shared by PhiThresholdStrategy and the two-budget
// adversary sweep: givenas frontier (the children of the updated root), pick
// between the two heaviest branches with the exact golden-ratio test.
struct FirstMoveInfo {
    int heavy = -1;     // a: max weight, ties by ascending id
    int runner = -1;    // b (== heavy when the root has a single child)
    int chosen = -1;
    Rat min_ratio = 0;  // exact min of (w_a + bw_b_i) / (w_b + bw_a_i)
};
FirstMoveInfo phi_first_choice(const RootedTree& t, const std::vector<int>& frontier,
                               int levels_below);

// The online two-firefighter algorithm: first firefighter decided by the
// golden-ratio threshold over per-level maxima of the two heaviest branches,
// every later firefighter goes to a heaviest branch of the updated root.
// Runs feasibly on any integral instance; the 1/phi guarantee holds when at
// most two firefighters arrive in total.
class PhiThresholdStrategy : public Strategy {
  public:
    std::string name() const override { return "algo2"; }
    void start(const RootedTree& t, const LevelTree* lt) override;
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;
    const std::optional<FirstMoveInfo>& first_move() const { return first_; }

  private:
    bool first_pending_ = true;
    std::optional<FirstMoveInfo> first_;
};

// Spreads the budget evenly across the level: f_i/|T_i| per vertex, capped
// by the chain constraint. Contains the fire at the first level where the
// prefix sum of f_i/|T_i| reaches 1.
class EvenSpreadStrategy : public Strategy {
  public:
    std::string name() const override { return "even"; }
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;
};

// Offline containment strategy for S_i -> infinity with S_i/|T_i| bounded
// away from 0 along a witness subsequence sigma. Each turn protects the
// level vertices with the most descendants at the computed target level.
struct LevelTargetConfig {
    Rat growth_const = 2;                // C with |T_sigma(i)| <= C * S_sigma(i)
    std::function<int(int)> sigma;       // increasing injection on i >= 1
    std::string sigma_name = "id";
    int search_guard = 100000;           // scan bound for the two proof ranks
};
class LevelTargetStrategy : public Strategy {
  public:
    explicit LevelTargetStrategy(LevelTargetConfig cfg);
    std::string name() const override { return "level_target"; }
    bool offline() const override { return true; }
    void start(const RootedTree& t, const LevelTree* lt) override;
    void start_offline(const FirefighterSequence& f, int horizon) override;
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;

    int target_level() const { return target_; }        // sigma(h)
    int product_rank() const { return rank_n_; }        // N of the proof

  private:
    LevelTargetConfig cfg_;
    const RootedTree* tree_ = nullptr;
    int target_ = -1;
    int rank_n_ = -1;
    std::vector<long long> target_descendants_;
};

// Online containment for trees with linear level growth (|T_i| <= C*i),
// assuming some non-zero periodic sequence is weaker than (f_i). Plays in
// phases: during phase k every arriving firefighter goes to the level vertex
// with the most descendants at level h(n_k); if the fire survives to turn
// h(n_k) the modulus escalates.
struct LinearGrowthConfig {
    Rat growth_const = 2;               // C > 1
    long long start_modulus = 100;      // n_0
    long long product_guard = 20000;    // max rounds when computing N(n)
    long long prefix_guard = 2'000'000; // max vertices materialized for targets
};
class LinearGrowthStrategy : public Strategy {
  public:
    explicit LinearGrowthStrategy(LinearGrowthConfig cfg);
    std::string name() const override { return "linear_growth"; }
    void start(const RootedTree& t, const LevelTree* lt) override;
    void observe(int turn, const Rat& budget) override;
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;

    // Phase horizon h(n_0); -1 when the round computation hit its guard.
    long long initial_phase_horizon() const { return initial_phase_end_; }

  private:
    void set_phase(const Int& modulus);

    LinearGrowthConfig cfg_;
    const RootedTree* tree_ = nullptr;
    const LevelTree* level_tree_ = nullptr;
    Int modulus_ = 0;
    long long phase_end_ = -1;  // h(n_k); -1 = beyond guard, no escalation
    long long initial_phase_end_ = -1;
    int target_ = -1;
    std::vector<long long> target_descendants_;
    Rat received_ = 0;
    Rat received_at_phase_end_ = 0;
};

// Least N with prod_{j=1..N} (Cnj-1)/(Cnj) < 1/(2Cn); nullopt when the guard
// is hit first. Exact integer arithmetic.
std::optional<long long> escalation_rounds(const Rat& growth_const, const Int& modulus,
                                           long long guard);

// Strategy specs from CLI flags / JSON: name in
// {gr, algo2, degree, even, level_target, linear_growth} plus parameters.
struct StrategyConfig {
    std::string name;
    std::map<std::string, std::string> params;
};
std::unique_ptr<Strategy> make_strategy(const StrategyConfig& cfg);

}  // namespace firetree
