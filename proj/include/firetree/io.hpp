#pragma once

#include <optional>
#include <string>

#include "firetree/adversary.hpp"
#include "firetree/engine.hpp"
#include "firetree/level_tree.hpp"
#include "firetree/offline.hpp"
#include "firetree/separation.hpp"
#include "firetree/sequence.hpp"
#include "firetree/strategies.hpp"
#include "firetree/tree.hpp"

namespace firetree {

// Tree file format: {"n": int, "root": int, "parents": [[child, parent], ...]}
// with parents sorted by child id, plus an optional family record. Emitting
// then parsing is the identity.
std::string tree_to_json(const RootedTree& t);
RootedTree tree_from_json(const std::string& text);

// Sequence file format: {"kind": "explicit"|"periodic", "values":
// [["num","den"], ...], "period": int?, "integral": bool}. Rule-backed
// sequences only exist as spec strings and are rejected here.
std::string sequence_to_json(const FirefighterSequence& f, int explicit_len = 0);
FirefighterSequence sequence_from_json(const std::string& text);

std::string transcript_to_json(const Transcript& tr);
std::string outcome_to_json(const GameOutcome& o, bool include_transcript);

std::string targeting_to_json(const TargetingOutcome& o);
std::string separation_witness_to_json(const SeparationWitness& w);
std::string losing_witness_to_json(const LosingWitness& w);

std::string worst_case_to_json(const std::string& instance, const std::string& strategy,
                               const WorstCase& wc);
// Report row: instance, strategy, worst sequence, online value, offline
// values, ratio as exact fraction and decimal.
std::string worst_case_csv_header();
std::string worst_case_to_csv(const std::string& instance, const std::string& strategy,
                              const WorstCase& wc);

std::string first_move_report_to_json(const std::string& instance, const FirstMoveReport& r);
std::string first_move_csv_header();
std::string first_move_report_to_csv(const std::string& instance, const FirstMoveReport& r);

// Spec-string parsers used by the CLI and the python bindings.
// Families: path(n), star(k), perfect_binary(h), spider(L), random(n,seed),
// pincer(k,l,m) are finite; sst(a1,..[;rest=c]), spider_inf, width(w) are
// level trees.
struct ParsedFamily {
    std::optional<RootedTree> finite;
    std::optional<LevelTree> level;
};
ParsedFamily parse_family(const std::string& spec);

// Sequences: const:c | list:v1,v2,... | list:v1,..;rest=c | periodic:p1,p2,..
// where values are rationals ("3/2", "1.5", "2").
FirefighterSequence parse_sequence_spec(const std::string& spec);

// Strategies: name[:key=value,key=value]  e.g. "linear_growth:C=2,n0=2".
StrategyConfig parse_strategy_spec(const std::string& spec);
std::string strategy_config_to_json(const StrategyConfig& cfg);
StrategyConfig strategy_config_from_json(const std::string& text);

}  // namespace firetree
