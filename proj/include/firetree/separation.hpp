#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "firetree/level_tree.hpp"
#include "firetree/rational.hpp"
#include "firetree/sequence.hpp"

namespace firetree {

// Prefix-sum domination order on firefighter sequences.
enum class SeqOrder { Weaker, StrictlyWeaker, IncomparableOnPrefix };
SeqOrder compare_sequences(const FirefighterSequence& f, const FirefighterSequence& g,
                           int horizon);

// Raw fire recurrence on a spherically symmetric tree: F_0 = 1,
// F_i = a_i F_{i-1} - f_i. The mass reaching level i is max{0, F_i};
// values may go negative and are returned unclamped.
std::vector<Rat> fire_recurrence(const std::function<Int(int)>& child_counts,
                                 const FirefighterSequence& f, int depth);
std::vector<Rat> fire_recurrence(const std::vector<long long>& child_counts,
                                 const FirefighterSequence& f, int depth);

// First level whose recurrence value drops to 0 or below.
std::optional<int> containment_rank(const std::vector<Rat>& fire);

// Targeting interval produced by moving eps one turn earlier across index k:
// lower = F^(k,eps) at k+1, upper = F at k+1. Requires upper > 0 (the prefix
// must not already contain the fire under f) and eps != 0.
struct TargetBand {
    Rat lower;  // A
    Rat upper;  // B
};
TargetBand containment_band(const std::vector<Int>& child_prefix, const FirefighterSequence& f,
                            int k, const Rat& eps);

// The targeting game: starting from position 0 with unit step, divide the
// step by a chosen positive integer each turn and advance by f_i times it;
// the player wins on reaching [lower, upper).
struct TargetingInstance {
    Rat lower;  // A > 0
    Rat upper;  // B > A
    FirefighterSequence moves;
};
struct TargetingOutcome {
    bool won = false;
    int turn = 0;                 // winning turn, 0 when not reached
    std::vector<Int> divisors;    // a_1..a_turn (or ..horizon when lost)
    std::vector<Rat> positions;   // u_i
    std::vector<Rat> monitor;     // x_i = (upper - u_i) / step_i
    std::string reason;           // set when !won
};

// One large division up front: needs an N with S_N >= A * ceil(A/(B-A)).
TargetingOutcome targeting_single_divisor(const TargetingInstance& inst, int horizon);

// Smallest divisor keeping the position below the upper edge; wins whenever
// at least log2(B/(B-A)) moves reach B.
TargetingOutcome targeting_greedy(const TargetingInstance& inst, int horizon);

// Spherically symmetric separating witness: explicit child counts up to the
// separation rank, then the minimal-degree tail rule that keeps the fire
// alive under the weak sequence forever.
struct SeparationWitness {
    std::vector<Int> child_prefix;  // a_1..a_rank
    std::string tail_rule = "floor_f_over_F_plus_1";
    int first_diff = 0;             // k: first index where the sequences differ
    int rank = 0;                   // N: strong fire contained by level N
    Rat strong_fire_at_rank;        // recurrence value under the strong sequence at N
    int checked_to = 0;             // F_i > 0 under the weak sequence for i <= this
    bool swapped = false;           // true when g was the weaker sequence
    std::string method;             // "integral" | "greedy" | "single_divisor" | "prefix_only"
};

// Extends a witness into the full child-count sequence (prefix, then the
// floor rule driven by the weak sequence's recurrence).
class SeparatingChildCounts {
  public:
    SeparatingChildCounts(std::vector<Int> prefix, FirefighterSequence weak);
    Int at(int i);           // a_i, i >= 1
    Rat fire_at(int i);      // recurrence value under the weak sequence

  private:
    void extend(int i);
    std::vector<Int> a_;
    std::vector<Rat> fire_;  // fire_[i] = F_i, fire_[0] = 1
    FirefighterSequence weak_;
};

// Distinct integral sequences are always separated by the tree whose level-i
// degree is weak_i + 1; the fire mass stays exactly 1 under the weak
// sequence and dies at the first difference under the strong one.
SeparationWitness separate_integral(const FirefighterSequence& f, const FirefighterSequence& g,
                                    int horizon);

// General construction for f weaker than g: explicit prefix up to k+1, then
// a targeting-game solution for the interval, then the tail rule. Fails when
// neither targeting hypothesis is met within the horizon.
SeparationWitness construct_separating(const FirefighterSequence& f, const FirefighterSequence& g,
                                       int horizon);

// Verifies a witness by recurrence: weak fire positive up to checked_to,
// strong fire non-positive by `rank`. Throws on failure.
void verify_separation(const SeparationWitness& w, const FirefighterSequence& weak,
                       const FirefighterSequence& strong);

// Losing-instance constructor: given non-decreasing t_i -> infinity with
// sum f_i/t_i certifiably convergent, builds child counts whose levels track
// t_i within a factor 2 while the fire never dies.
struct LosingWitness {
    int tail_rank = 0;    // M: certified sum_{i>M} f_i/t_i < 1/4
    int start_rank = 0;   // N: t_N > 4 S_M, level sizes pinned from here on
    std::vector<Int> child_prefix;  // a_1..a_N
    std::string tail_rule = "floor_t_over_level";
    int checked_to = 0;
    Rat burn_share_sum;   // sum_{i<=checked_to} f_i/|T_i|, certified < 1
};
using GrowthSequence = std::function<Int(int)>;            // t_i, i >= 1
using TailBound = std::function<std::optional<Rat>(int)>;  // upper bound on sum_{i>M} f_i/t_i

LosingWitness build_losing_instance(const GrowthSequence& levels, const FirefighterSequence& f,
                                    int horizon, const TailBound& tail, int tail_guard = 64);

// Child counts a_i of a losing witness (floor rule past the prefix).
std::function<Int(int)> losing_child_counts(const LosingWitness& w, const GrowthSequence& levels);

}  // namespace firetree
