#pragma once

#include <functional>
#include <string>
#include <vector>

#include "firetree/engine.hpp"
#include "firetree/offline.hpp"
#include "firetree/rational.hpp"
#include "firetree/tree.hpp"

namespace firetree {

// All non-negative integral sequences of length `horizon` with sum at most
// `total`, in lexicographic order; the callback returns false to stop.
void enum_sequences(int total, int horizon,
                    const std::function<bool(const std::vector<long long>&)>& fn);

// C(horizon + total, total): the number of such sequences.
Int sequence_count(int total, int horizon);

// Named adversary patterns reproducing the gadget bounds without full
// enumeration: single firefighter, back-to-back pair, alternating pair, and
// the 1,0,1,1,1 burst. Padded with zeros to the horizon.
struct NamedSequence {
    std::string name;
    std::vector<long long> values;
};
std::vector<NamedSequence> pincer_fixture_sequences(int horizon);

// Online play with a forced first protection; later firefighters go to a
// heaviest available vertex. Used to evaluate both first moves of a gadget.
class ForcedFirstStrategy : public Strategy {
  public:
    explicit ForcedFirstStrategy(int forced) : forced_(forced) {}
    std::string name() const override { return "forced_first"; }
    void start(const RootedTree&, const LevelTree*) override { first_pending_ = true; }
    Allocation allocate(const GameState& s, const RootedTree& t, const Rat& budget) override;

  private:
    int forced_;
    bool first_pending_ = true;
};

// Per-first-move worst case of a two-branch gadget over a sequence set:
// the adversary's best response ratio for each choice, exact fractions.
struct FirstMoveRow {
    std::string first_move;  // "x" or "y"
    std::string sequence_name;
    std::vector<long long> sequence;
    Rat online_value;
    Rat offline_value;
    Rat ratio;
};
struct FirstMoveReport {
    std::vector<FirstMoveRow> rows;
    Rat worst_ratio_x;
    Rat worst_ratio_y;
    Rat best_online;  // max of the two worst cases
};
FirstMoveReport pincer_first_move_report(const RootedTree& pincer,
                                         const std::vector<NamedSequence>& sequences,
                                         const SearchLimits& oracle_limits);

}  // namespace firetree
