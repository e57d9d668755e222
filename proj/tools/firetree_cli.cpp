// Command-line front end: builds instances, plays strategies against budget
// streams, runs the exact offline oracles and worst-case sweeps, and drives
// the separating / losing constructors. All outputs are deterministic JSON
// or CSV with exact "num/den" rationals.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "firetree/errors.hpp"
#include "firetree/io.hpp"
#include <json.hpp>

using namespace firetree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitStrategy = 3;
constexpr int kExitConstruction = 4;
constexpr int kExitGuard = 5;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

// --seq accepts spec strings or @file.json.
FirefighterSequence load_sequence(const std::string& spec, bool fractional) {
    FirefighterSequence f = spec.rfind('@', 0) == 0 ? sequence_from_json(slurp(spec.substr(1)))
                                                    : parse_sequence_spec(spec);
    return fractional ? f.as_fractional() : f;
}

StrategyConfig load_strategy(const std::string& spec) {
    if (spec.rfind('@', 0) == 0) return strategy_config_from_json(slurp(spec.substr(1)));
    return parse_strategy_spec(spec);
}

struct TreeInput {
    std::optional<RootedTree> finite;
    std::optional<LevelTree> level;
};

TreeInput load_tree(const std::string& tree_file, const std::string& family,
                    std::optional<long long> seed) {
    TreeInput in;
    if (!tree_file.empty()) {
        in.finite = tree_from_json(slurp(tree_file));
        return in;
    }
    std::string spec = family;
    if (seed && spec.rfind("random(", 0) == 0 && spec.find(',') == std::string::npos)
        spec = spec.substr(0, spec.size() - 1) + "," + std::to_string(*seed) + ")";
    ParsedFamily fam = parse_family(spec);
    in.finite = std::move(fam.finite);
    in.level = std::move(fam.level);
    return in;
}

int cmd_gen(const std::string& family, std::optional<long long> seed, const std::string& out) {
    TreeInput in = load_tree("", family, seed);
    if (!in.finite) throw ParseError("gen needs a finite family");
    emit(tree_to_json(*in.finite), out);
    return kExitOk;
}

int cmd_simulate(const std::string& tree_file, const std::string& family,
                 std::optional<long long> seed, const std::string& seq_spec, bool fractional,
                 const std::string& strat_spec, int horizon, bool transcript,
                 const std::string& out) {
    TreeInput in = load_tree(tree_file, family, seed);
    FirefighterSequence f = load_sequence(seq_spec, fractional);
    std::unique_ptr<Strategy> strat = make_strategy(load_strategy(strat_spec));
    GameOutcome outcome;
    if (in.finite) {
        outcome = play_game(*in.finite, f, *strat, horizon > 0 ? horizon : -1);
    } else {
        if (horizon <= 0) throw ParseError("--horizon is mandatory on level trees");
        outcome = play_on_prefix(*in.level, f, *strat, horizon);
    }
    emit(outcome_to_json(outcome, transcript), out);
    return kExitOk;
}

int cmd_ratio(const std::string& tree_file, const std::string& family,
              std::optional<long long> seed, const std::string& strat_spec, int budget,
              bool fixtures, const std::string& format, const std::string& out) {
    TreeInput in = load_tree(tree_file, family, seed);
    if (!in.finite) throw ParseError("ratio runs on finite trees");
    const RootedTree& t = *in.finite;
    std::string instance = t.family().empty() ? "tree" : t.family();
    StrategyConfig cfg = load_strategy(strat_spec);

    if (fixtures) {
        SearchLimits lim;
        lim.max_vertices = std::max(25, t.vertex_count());
        FirstMoveReport report = pincer_first_move_report(t, pincer_fixture_sequences(t.height()), lim);
        emit(format == "csv" ? first_move_csv_header() + first_move_report_to_csv(instance, report)
                             : first_move_report_to_json(instance, report),
             out);
        return kExitOk;
    }

    WorstCase wc;
    if (budget <= 2 && t.vertex_count() > 25) {
        if (cfg.name == "gr")
            wc = worst_ratio_two_budget(t, FirstMoveRule::MaxWeight);
        else if (cfg.name == "algo2")
            wc = worst_ratio_two_budget(t, FirstMoveRule::PhiTest);
        else
            throw GuardExceeded("large-tree sweeps support gr and algo2 only");
    } else {
        AdversaryLimits lim;
        lim.oracle.max_vertices = std::max(25, t.vertex_count());
        auto factory = [&] { return make_strategy(cfg); };
        wc = worst_ratio(t, factory, budget, lim);
    }
    if (t.vertex_count() <= 400) {
        FirefighterSequence worst = FirefighterSequence::explicit_list(make_rats(wc.sequence));
        wc.fractional_value = beta_fractional(t, worst).value;
    }
    emit(format == "csv" ? worst_case_csv_header() + worst_case_to_csv(instance, cfg.name, wc)
                         : worst_case_to_json(instance, cfg.name, wc),
         out);
    return kExitOk;
}

int cmd_separate(const std::string& weak_spec, const std::string& strong_spec, int horizon,
                 bool integral_only, const std::string& out) {
    FirefighterSequence f = load_sequence(weak_spec, false);
    FirefighterSequence g = load_sequence(strong_spec, false);
    SeparationWitness w = integral_only ? separate_integral(f, g, horizon)
                                        : construct_separating(f, g, horizon);
    emit(separation_witness_to_json(w), out);
    return kExitOk;
}

int cmd_target(const std::string& lower, const std::string& upper, const std::string& seq_spec,
               const std::string& method, int horizon, const std::string& out) {
    TargetingInstance inst{rat_from_string(lower), rat_from_string(upper),
                           load_sequence(seq_spec, false).as_fractional()};
    TargetingOutcome outcome;
    if (method == "greedy")
        outcome = targeting_greedy(inst, horizon);
    else if (method == "single_divisor")
        outcome = targeting_single_divisor(inst, horizon);
    else
        throw ParseError("method must be greedy or single_divisor");
    emit(targeting_to_json(outcome), out);
    if (!outcome.won) return kExitConstruction;
    return kExitOk;
}

int cmd_probe(const std::string& family, const std::string& seq_spec, int horizon,
              const std::string& c_witness, const std::string& sigma, const std::string& out) {
    ParsedFamily fam = parse_family(family);
    if (!fam.level) throw ParseError("probe runs on level-tree families");
    FirefighterSequence f = load_sequence(seq_spec, false);

    nlohmann::json j;
    Rat share_sum = 0;
    for (int i = 1; i <= horizon; ++i)
        share_sum += f.at(i) / make_rat(fam.level->level_size(i));
    j["share_sum_at_horizon"] = rat_to_string(share_sum);

    {
        EvenSpreadStrategy even;
        GameOutcome o = play_on_prefix(*fam.level, f.as_fractional(), even, horizon);
        j["even_spread"] = {{"contained", o.contained}, {"turns", o.turns_played}};
    }
    try {
        LevelTargetConfig cfg;
        cfg.growth_const = rat_from_string(c_witness);
        if (sigma == "id")
            cfg.sigma = [](int i) { return i; };
        else
            throw ParseError("probe supports sigma=id only");
        LevelTargetStrategy strat(cfg);
        GameOutcome o = play_on_prefix(*fam.level, f, strat, horizon);
        j["level_target"] = {{"contained", o.contained},
                             {"turns", o.turns_played},
                             {"target_level", strat.target_level()}};
    } catch (const std::exception& e) {
        j["level_target"] = {{"skipped", e.what()}};
    }
    j["conclusive"] = false;  // a finite prefix proves nothing about the limit
    emit(j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_experiment(const std::string& manifest_path, const std::string& format,
                   const std::string& out) {
    nlohmann::json m = nlohmann::json::parse(slurp(manifest_path), nullptr, false);
    if (m.is_discarded()) throw ParseError("malformed manifest");
    std::string family = m.value("family", "pincer");
    std::string strategy = m.value("strategy", "algo2");
    int budget = m.value("budget", 2);
    bool fixtures = m.value("fixtures", false);
    std::string rows_csv = fixtures ? first_move_csv_header() : worst_case_csv_header();
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& params : m["grid"]) {
        std::string spec = family + "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) spec += ",";
            spec += std::to_string(params[i].get<long long>());
        }
        spec += ")";
        RootedTree t = *parse_family(spec).finite;
        if (fixtures) {
            SearchLimits lim;
            lim.max_vertices = std::max(25, t.vertex_count());
            FirstMoveReport r = pincer_first_move_report(t, pincer_fixture_sequences(t.height()), lim);
            if (format == "csv") {
                rows_csv += first_move_report_to_csv(spec, r);
            } else {
                rows_json.push_back(nlohmann::json::parse(first_move_report_to_json(spec, r)));
            }
            continue;
        }
        WorstCase wc;
        if (budget <= 2 && t.vertex_count() > 25) {
            wc = worst_ratio_two_budget(t, strategy == "gr" ? FirstMoveRule::MaxWeight
                                                            : FirstMoveRule::PhiTest);
        } else {
            AdversaryLimits lim;
            lim.oracle.max_vertices = std::max(25, t.vertex_count());
            StrategyConfig cfg{strategy, {}};
            wc = worst_ratio(t, [&] { return make_strategy(cfg); }, budget, lim);
        }
        if (format == "csv")
            rows_csv += worst_case_to_csv(spec, strategy, wc);
        else
            rows_json.push_back(nlohmann::json::parse(worst_case_to_json(spec, strategy, wc)));
    }
    emit(format == "csv" ? rows_csv : rows_json.dump(2) + "\n", out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"firefighter games on finite and infinite trees"};
    app.require_subcommand(1);

    std::string tree_file, family, seq, seq2, strat = "gr", out, format = "json";
    std::string lower, upper, method = "greedy", manifest, c_witness = "2", sigma = "id";
    int horizon = -1, budget = 1;
    bool transcript = false, fractional = false, integral_only = false, fixtures = false;
    std::optional<long long> seed;
    long long seed_raw = -1;

    auto add_tree_opts = [&](CLI::App* cmd) {
        cmd->add_option("--tree", tree_file, "tree JSON file");
        cmd->add_option("--family", family, "family spec, e.g. pincer(4,901,1001)");
        cmd->add_option("--seed", seed_raw, "seed inserted into random(n)");
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a generated tree as JSON");
    add_tree_opts(gen);
    gen->add_option("--out", out, "output file (stdout otherwise)");

    CLI::App* sim = app.add_subcommand("simulate", "play one game");
    add_tree_opts(sim);
    sim->add_option("--seq", seq, "sequence spec or @file.json")->required();
    sim->add_option("--strategy", strat, "strategy spec or @file.json");
    sim->add_option("--horizon", horizon, "turns to play (mandatory on level trees)");
    sim->add_flag("--fractional", fractional, "play the fractional game");
    sim->add_flag("--transcript", transcript, "include the transcript");
    sim->add_option("--out", out, "output file");

    CLI::App* ratio = app.add_subcommand("ratio", "worst-case competitive ratio");
    add_tree_opts(ratio);
    ratio->add_option("--strategy", strat, "strategy spec");
    ratio->add_option("--budget", budget, "adversary total budget");
    ratio->add_flag("--fixtures", fixtures, "use the named gadget sequences");
    ratio->add_option("--format", format, "json or csv");
    ratio->add_option("--out", out, "output file");

    CLI::App* sep = app.add_subcommand("separate", "build a separating tree witness");
    sep->add_option("--seq", seq, "weaker sequence spec")->required();
    sep->add_option("--seq2", seq2, "stronger sequence spec")->required();
    sep->add_option("--horizon", horizon, "search horizon")->required();
    sep->add_flag("--integral", integral_only, "use the integral construction");
    sep->add_option("--out", out, "output file");

    CLI::App* tgt = app.add_subcommand("target", "play the targeting game");
    tgt->add_option("--lower", lower, "interval lower edge A")->required();
    tgt->add_option("--upper", upper, "interval upper edge B")->required();
    tgt->add_option("--seq", seq, "move sequence spec")->required();
    tgt->add_option("--method", method, "greedy or single_divisor");
    tgt->add_option("--horizon", horizon, "turns to search")->required();
    tgt->add_option("--out", out, "output file");

    CLI::App* probe = app.add_subcommand("probe", "containment probe (non-conclusive)");
    probe->add_option("--family", family, "level-tree family spec")->required();
    probe->add_option("--seq", seq, "sequence spec")->required();
    probe->add_option("--horizon", horizon, "prefix depth")->required();
    probe->add_option("--C", c_witness, "level-target growth witness");
    probe->add_option("--sigma", sigma, "level-target subsequence witness");
    probe->add_option("--out", out, "output file");

    CLI::App* exp = app.add_subcommand("experiment", "run a manifest of instances");
    exp->add_option("--manifest", manifest, "manifest JSON file")->required();
    exp->add_option("--format", format, "json or csv");
    exp->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (seed_raw >= 0) seed = seed_raw;
    try {
        if (gen->parsed()) return cmd_gen(family, seed, out);
        if (sim->parsed())
            return cmd_simulate(tree_file, family, seed, seq, fractional, strat, horizon,
                                transcript, out);
        if (ratio->parsed())
            return cmd_ratio(tree_file, family, seed, strat, budget, fixtures, format, out);
        if (sep->parsed()) return cmd_separate(seq, seq2, horizon, integral_only, out);
        if (tgt->parsed()) return cmd_target(lower, upper, seq, method, horizon, out);
        if (probe->parsed()) return cmd_probe(family, seq, horizon, c_witness, sigma, out);
        if (exp->parsed()) return cmd_experiment(manifest, format, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const MoveViolation& e) {
        std::cerr << "strategy violation: " << e.what() << "\n";
        return kExitStrategy;
    } catch (const InvalidInstance& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kExitStrategy;
    } catch (const ConstructionFailure& e) {
        std::cerr << "construction failure: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    }
    return kExitOk;
}
