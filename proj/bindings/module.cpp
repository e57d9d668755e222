// Python bindings for the main operations: instance builders, game playing,
// exact oracles, the targeting game and the separating/losing constructors.
// Rationals cross the boundary as "num/den" strings; the python package
// wraps them into fractions.Fraction.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "firetree/adversary.hpp"
#include "firetree/errors.hpp"
#include "firetree/io.hpp"
#include "firetree/offline.hpp"
#include "firetree/separation.hpp"

namespace py = pybind11;
using namespace firetree;

namespace {

FirefighterSequence seq_from_spec(const std::string& spec, bool fractional) {
    FirefighterSequence f = parse_sequence_spec(spec);
    return fractional ? f.as_fractional() : f;
}

py::dict outcome_dict(const GameOutcome& o) {
    py::dict d;
    d["saved"] = rat_to_string(o.saved);
    d["turns"] = o.turns_played;
    d["contained"] = o.contained;
    py::list tr;
    for (const auto& rec : o.transcript) {
        py::list allocs;
        for (const auto& [v, amt] : rec.amounts)
            allocs.append(py::make_tuple(v, rat_to_string(amt)));
        py::dict row;
        row["turn"] = rec.turn;
        row["allocations"] = allocs;
        tr.append(row);
    }
    d["transcript"] = tr;
    return d;
}

py::dict targeting_dict(const TargetingOutcome& o) {
    py::dict d;
    d["won"] = o.won;
    d["turn"] = o.turn;
    py::list div, pos, mon;
    for (const Int& a : o.divisors) div.append(a.get_str());
    for (const Rat& u : o.positions) pos.append(rat_to_string(u));
    for (const Rat& x : o.monitor) mon.append(rat_to_string(x));
    d["divisors"] = div;
    d["positions"] = pos;
    d["monitor"] = mon;
    if (!o.won) d["reason"] = o.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_firetree, m) {
    m.doc() = "firefighter and fractional-firefighter games on trees";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<GuardExceeded>(m, "GuardExceeded");
    py::register_exception<ConstructionFailure>(m, "ConstructionFailure");
    py::register_exception<InvalidInstance>(m, "InvalidInstance");

    py::class_<RootedTree>(m, "RootedTree")
        .def_static(
            "from_parent_pairs",
            [](const std::vector<std::pair<int, int>>& edges, int root) {
                return RootedTree::from_parent_pairs(edges, root);
            },
            py::arg("edges"), py::arg("root") = 0)
        .def_property_readonly("n", &RootedTree::vertex_count)
        .def_property_readonly("root", &RootedTree::root)
        .def_property_readonly("height", &RootedTree::height)
        .def("parent", &RootedTree::parent)
        .def("children", &RootedTree::children)
        .def("level", &RootedTree::level)
        .def("level_of", &RootedTree::level_of)
        .def("weight", &RootedTree::weight)
        .def("max_weight_at_level", &RootedTree::max_weight_at_level)
        .def("contract_levels", &RootedTree::contract_levels)
        .def("to_json", [](const RootedTree& t) { return tree_to_json(t); })
        .def_static("from_json", [](const std::string& s) { return tree_from_json(s); })
        .def_property_readonly("family", &RootedTree::family)
        .def("__repr__", [](const RootedTree& t) {
            return "<RootedTree n=" + std::to_string(t.vertex_count()) + " h=" +
                   std::to_string(t.height()) + ">";
        });

    m.def("path", &make_path, py::arg("n"));
    m.def("star", &make_star, py::arg("leaves"));
    m.def("perfect_binary", &make_perfect_binary, py::arg("height"));
    m.def("spider", &make_spider, py::arg("levels"));
    m.def("random_tree", &make_random, py::arg("n"), py::arg("seed"));
    m.def("pincer", &make_pincer, py::arg("chains"), py::arg("left"), py::arg("right"));
    m.def("family", [](const std::string& spec) {
        ParsedFamily f = parse_family(spec);
        if (!f.finite) throw ParseError("family(): finite families only; see level_family()");
        return *f.finite;
    });

    py::class_<LevelTree>(m, "LevelTree")
        .def("level_size", &LevelTree::level_size)
        .def("prefix_tree", &LevelTree::prefix_tree)
        .def("pruned_leafless", &LevelTree::pruned_leafless)
        .def_property_readonly("name", &LevelTree::name);
    m.def("level_family", [](const std::string& spec) {
        ParsedFamily f = parse_family(spec);
        if (!f.level) throw ParseError("level_family(): level-tree families only");
        return *f.level;
    });

    m.def(
        "simulate",
        [](const RootedTree& t, const std::string& seq, const std::string& strategy,
           int horizon, bool fractional) {
            FirefighterSequence f = seq_from_spec(seq, fractional);
            auto strat = make_strategy(parse_strategy_spec(strategy));
            return outcome_dict(play_game(t, f, *strat, horizon));
        },
        py::arg("tree"), py::arg("seq"), py::arg("strategy") = "gr", py::arg("horizon") = -1,
        py::arg("fractional") = false);

    m.def(
        "simulate_prefix",
        [](const LevelTree& t, const std::string& seq, const std::string& strategy, int horizon,
           bool fractional) {
            FirefighterSequence f = seq_from_spec(seq, fractional);
            auto strat = make_strategy(parse_strategy_spec(strategy));
            return outcome_dict(play_on_prefix(t, f, *strat, horizon));
        },
        py::arg("tree"), py::arg("seq"), py::arg("strategy"), py::arg("horizon"),
        py::arg("fractional") = false);

    m.def(
        "beta_integral",
        [](const RootedTree& t, const std::string& seq, int max_vertices) {
            SearchLimits lim;
            lim.max_vertices = max_vertices;
            OptResult r = beta_integral(t, seq_from_spec(seq, false), lim);
            return py::make_tuple(rat_to_string(r.value), r.nodes_explored);
        },
        py::arg("tree"), py::arg("seq"), py::arg("max_vertices") = 25);

    m.def("beta_fractional", [](const RootedTree& t, const std::string& seq) {
        OptResult r = beta_fractional(t, seq_from_spec(seq, true));
        return rat_to_string(r.value);
    });

    m.def("bob_two", [](const RootedTree& t, const std::string& seq) {
        OptResult r = bob_two(t, seq_from_spec(seq, false));
        return rat_to_string(r.value);
    });

    m.def(
        "worst_ratio",
        [](const RootedTree& t, const std::string& strategy, int budget) {
            py::dict d;
            WorstCase wc;
            if (budget <= 2 && t.vertex_count() > 25) {
                if (strategy == "gr")
                    wc = worst_ratio_two_budget(t, FirstMoveRule::MaxWeight);
                else if (strategy == "algo2")
                    wc = worst_ratio_two_budget(t, FirstMoveRule::PhiTest);
                else
                    throw GuardExceeded("large-tree sweeps support gr and algo2 only");
            } else {
                StrategyConfig cfg = parse_strategy_spec(strategy);
                AdversaryLimits lim;
                lim.oracle.max_vertices = std::max(25, t.vertex_count());
                wc = worst_ratio(t, [&] { return make_strategy(cfg); }, budget, lim);
            }
            d["ratio"] = rat_to_string(wc.ratio);
            d["sequence"] = wc.sequence;
            d["online_value"] = rat_to_string(wc.online_value);
            d["offline_value"] = rat_to_string(wc.offline_value);
            return d;
        },
        py::arg("tree"), py::arg("strategy"), py::arg("budget"));

    m.def(
        "first_move_report",
        [](const RootedTree& t) {
            SearchLimits lim;
            lim.max_vertices = std::max(25, t.vertex_count());
            FirstMoveReport r = pincer_first_move_report(t, pincer_fixture_sequences(t.height()), lim);
            py::dict d;
            d["worst_ratio_x"] = rat_to_string(r.worst_ratio_x);
            d["worst_ratio_y"] = rat_to_string(r.worst_ratio_y);
            d["best_online"] = rat_to_string(r.best_online);
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict rd;
                rd["first_move"] = row.first_move;
                rd["sequence_name"] = row.sequence_name;
                rd["online_value"] = rat_to_string(row.online_value);
                rd["offline_value"] = rat_to_string(row.offline_value);
                rd["ratio"] = rat_to_string(row.ratio);
                rows.append(rd);
            }
            d["rows"] = rows;
            return d;
        },
        py::arg("tree"));

    m.def(
        "fire_recurrence",
        [](const std::vector<long long>& degrees, const std::string& seq, int depth) {
            auto fire = fire_recurrence(degrees, seq_from_spec(seq, true), depth);
            std::vector<std::string> out;
            for (const Rat& v : fire) out.push_back(rat_to_string(v));
            return out;
        },
        py::arg("degrees"), py::arg("seq"), py::arg("depth"));

    m.def(
        "targeting",
        [](const std::string& lower, const std::string& upper, const std::string& seq,
           const std::string& method, int horizon) {
            TargetingInstance inst{rat_from_string(lower), rat_from_string(upper),
                                   seq_from_spec(seq, true)};
            TargetingOutcome o = method == "greedy" ? targeting_greedy(inst, horizon)
                                                    : targeting_single_divisor(inst, horizon);
            return targeting_dict(o);
        },
        py::arg("lower"), py::arg("upper"), py::arg("seq"), py::arg("method") = "greedy",
        py::arg("horizon") = 1000);

    m.def(
        "separate",
        [](const std::string& weak, const std::string& strong, int horizon, bool integral) {
            SeparationWitness w = integral
                                      ? separate_integral(seq_from_spec(weak, false),
                                                          seq_from_spec(strong, false), horizon)
                                      : construct_separating(seq_from_spec(weak, false),
                                                             seq_from_spec(strong, false),
                                                             horizon);
            py::dict d;
            py::list prefix;
            for (const Int& a : w.child_prefix) prefix.append(a.get_str());
            d["prefix"] = prefix;
            d["tail_rule"] = w.tail_rule;
            d["first_diff"] = w.first_diff;
            d["rank"] = w.rank;
            d["strong_fire_at_rank"] = rat_to_string(w.strong_fire_at_rank);
            d["checked_to"] = w.checked_to;
            d["method"] = w.method;
            d["swapped"] = w.swapped;
            return d;
        },
        py::arg("weak"), py::arg("strong"), py::arg("horizon") = 200,
        py::arg("integral") = false);

    m.def(
        "losing_instance",
        [](const std::string& growth, const std::string& seq, int horizon) {
            GrowthSequence t;
            TailBound tail;
            if (growth == "doubling") {
                t = [](int i) {
                    Int v = 1;
                    v <<= i;
                    return v;
                };
                FirefighterSequence f = seq_from_spec(seq, false);
                tail = [f](int m) -> std::optional<Rat> {
                    // valid upper bound for streams below 1: sum_{i>m} f_i/2^i
                    Rat bound = 0, pw = 1;
                    for (int i = 1; i <= m; ++i) pw /= 2;
                    Rat geom = pw;  // sum_{i>m} 2^-i = 2^-m
                    Rat sup = 0;
                    for (int i = 1; i <= 64; ++i) sup = std::max(sup, f.at(i));
                    return sup * geom;
                };
            } else {
                throw ParseError("growth rules supported here: doubling");
            }
            LosingWitness w = build_losing_instance(t, seq_from_spec(seq, false), horizon, tail);
            py::dict d;
            py::list prefix;
            for (const Int& a : w.child_prefix) prefix.append(a.get_str());
            d["prefix"] = prefix;
            d["tail_rule"] = w.tail_rule;
            d["M"] = w.tail_rank;
            d["N"] = w.start_rank;
            d["burn_share_sum"] = rat_to_string(w.burn_share_sum);
            d["checked_to"] = w.checked_to;
            return d;
        },
        py::arg("growth"), py::arg("seq"), py::arg("horizon") = 50);

    m.def("sequence_count",
          [](int total, int horizon) { return sequence_count(total, horizon).get_str(); });
    m.def("compare_sequences", [](const std::string& f, const std::string& g, int horizon) {
        switch (compare_sequences(seq_from_spec(f, false), seq_from_spec(g, false), horizon)) {
            case SeqOrder::Weaker: return "weaker";
            case SeqOrder::StrictlyWeaker: return "strictly_weaker";
            default: return "incomparable";
        }
    });
}
