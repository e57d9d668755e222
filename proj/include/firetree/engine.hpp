#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firetree/level_tree.hpp"
#include "firetree/rational.hpp"
#include "firetree/sequence.hpp"
#include "firetree/tree.hpp"

namespace firetree {

// Protection placed in one turn; support is restricted to the current level.
struct Allocation {
    std::vector<std::pair<int, Rat>> amounts;  // (vertex, amount), ascending ids
    void add(int v, const Rat& amt) { amounts.emplace_back(v, amt); }
    Rat total() const;
};

enum class ViolationKind { BudgetExceeded, OverProtection, WrongLevel, NonIntegral, NegativeAmount };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

const char* violation_name(ViolationKind k);

// Thrown by the engine when a strategy returns an invalid move.
struct MoveViolation : std::runtime_error {
    explicit MoveViolation(Violation v)
        : std::runtime_error(std::string(violation_name(v.kind)) + ": " + v.detail),
          violation(std::move(v)) {}
    Violation violation;
};

struct TurnRecord {
    int turn;
    std::vector<std::pair<int, Rat>> amounts;
};
using Transcript = std::vector<TurnRecord>;

// Mutable per-game record. Fire and protection are frozen for a level once
// its turn has been played; on trees the burnt fraction of v only depends on
// its ancestors' protection.
class GameState {
  public:
    explicit GameState(const RootedTree& t);

    int turn() const { return turn_; }
    bool contained() const { return contained_; }
    // Protection placed directly on v at its level's turn.
    const Rat& own_protection(int v) const { return own_[static_cast<size_t>(v)]; }
    // Protection inherited from strict ancestors (P_p). Valid for vertices
    // at levels <= current turn.
    const Rat& ancestor_protection(int v) const { return anc_[static_cast<size_t>(v)]; }
    // Burnt fraction; valid for levels <= the last spread turn.
    const Rat& burnt(int v) const { return burn_[static_cast<size_t>(v)]; }
    // Room left by constraint (ii): 1 - P_p(v) - p(v).
    Rat remaining_cap(int v) const;
    // Total burning mass on the most recently burnt level.
    const Rat& frontier_mass() const { return mass_; }

  private:
    friend class Engine;
    int turn_ = 0;
    bool contained_ = false;
    std::vector<Rat> own_, anc_, burn_;
    Rat mass_ = 1;
};

// Move check for constraints [C]: budget, ancestor-chain capacity, level
// support, and 0/1 values in the integral game.
std::optional<Violation> check_move(const GameState& s, const RootedTree& t, const Allocation& a,
                                    const Rat& budget, bool integral);

struct GameOutcome {
    Rat saved = 0;  // sum of p(v) * w(v); on finite trees = n - burnt mass
    int turns_played = 0;
    bool contained = false;
    Transcript transcript;
    std::vector<Rat> level_burn;  // burning mass per level, [0] = 1; ends at
                                  // the last played turn, zero afterwards
};

// Two-phase strategy contract. Online strategies only ever see f_i through
// observe(); offline ones additionally receive the whole sequence before the
// first turn. Instances are single-game: the engine calls start() first.
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual bool offline() const { return false; }
    // lt is non-null when playing on a LevelTree prefix.
    virtual void start(const RootedTree& /*t*/, const LevelTree* /*lt*/) {}
    virtual void start_offline(const FirefighterSequence& /*f*/, int /*horizon*/) {}
    virtual void observe(int /*turn*/, const Rat& /*budget*/) {}
    virtual Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) = 0;
};

// Replays a fixed transcript (offline optimum witnesses, regression games).
class ReplayStrategy : public Strategy {
  public:
    explicit ReplayStrategy(Transcript t) : transcript_(std::move(t)) {}
    std::string name() const override { return "replay"; }
    Allocation allocate(const GameState& s, const RootedTree&, const Rat&) override;

  private:
    Transcript transcript_;
};

// Plays nothing; the fire burns freely.
class NullStrategy : public Strategy {
  public:
    std::string name() const override { return "null"; }
    Allocation allocate(const GameState&, const RootedTree&, const Rat&) override { return {}; }
};

// Runs a full game. horizon < 0 means h(t) on a finite tree; a smaller
// horizon is rejected so termination is by containment or level exhaustion.
// On a general graph the game would stop within the longest induced path
// from the ignition vertex; on a tree that bound is the height, which is
// what the loop enforces.
GameOutcome play_game(const RootedTree& t, const FirefighterSequence& f, Strategy& strat,
                      int horizon = -1);

// Materializes the prefix to `horizon` and plays on it; `saved` refers to
// prefix weights.
GameOutcome play_on_prefix(const LevelTree& lt, const FirefighterSequence& f, Strategy& strat,
                           int horizon);

// saved/opt with the convention 1 when opt = 0; throws when opt < saved.
Rat competitive_ratio(const Rat& saved, const Rat& opt);

}  // namespace firetree
