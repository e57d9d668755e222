#include "firetree/io.hpp"

#include <memory>

#include <json.hpp>
#include <sstream>

#include "firetree/errors.hpp"

namespace firetree {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

json rat_pair(const Rat& r) {
    return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [num, den]");
    Rat r(Int(j[0].get<std::string>()), Int(j[1].get<std::string>()));
    if (r.get_den() == 0) throw ParseError("zero denominator");
    r.canonicalize();
    return r;
}

json transcript_json(const Transcript& tr) {
    json out = json::array();
    for (const auto& rec : tr) {
        json allocs = json::array();
        for (const auto& [v, amt] : rec.amounts)
            allocs.push_back(json::array({v, rat_to_string(amt)}));
        out.push_back(json{{"turn", rec.turn}, {"allocations", allocs}});
    }
    return out;
}

std::string csv_escape(const std::vector<long long>& seq) {
    std::ostringstream os;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) os << ' ';
        os << seq[i];
    }
    return os.str();
}

}  // namespace

std::string tree_to_json(const RootedTree& t) {
    json parents = json::array();
    for (int v = 0; v < t.vertex_count(); ++v)
        if (v != t.root()) parents.push_back(json::array({v, t.parent(v)}));
    json j{{"n", t.vertex_count()}, {"root", t.root()}, {"parents", parents}};
    if (!t.family().empty()) j["family"] = json{{"spec", t.family()}};
    return j.dump(2) + "\n";
}

RootedTree tree_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("n") || !j.contains("root") || !j.contains("parents"))
        throw ParseError("tree JSON needs n, root and parents");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["parents"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("parents entries are [child, parent]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (static_cast<int>(edges.size()) + 1 != n)
        throw ParseError("vertex count does not match the edge list");
    try {
        RootedTree t = RootedTree::from_parent_pairs(edges, j["root"].get<int>());
        if (j.contains("family") && j["family"].contains("spec"))
            t.set_family(j["family"]["spec"].get<std::string>());
        return t;
    } catch (const InvalidInstance& e) {
        throw ParseError(std::string("invalid tree: ") + e.what());
    }
}

std::string sequence_to_json(const FirefighterSequence& f, int explicit_len) {
    json j;
    switch (f.kind()) {
        case FirefighterSequence::Kind::Explicit: {
            j["kind"] = "explicit";
            json vals = json::array();
            for (const Rat& v : f.values()) vals.push_back(rat_pair(v));
            j["values"] = vals;
            break;
        }
        case FirefighterSequence::Kind::Periodic: {
            j["kind"] = "periodic";
            json vals = json::array();
            for (const Rat& v : f.values()) vals.push_back(rat_pair(v));
            j["values"] = vals;
            j["period"] = static_cast<int>(f.values().size());
            break;
        }
        case FirefighterSequence::Kind::Rule: {
            if (explicit_len <= 0)
                throw ParseError("rule sequences serialize only as explicit prefixes");
            j["kind"] = "explicit";
            json vals = json::array();
            for (const Rat& v : f.first(explicit_len)) vals.push_back(rat_pair(v));
            j["values"] = vals;
            break;
        }
    }
    j["integral"] = f.integral();
    return j.dump(2) + "\n";
}

FirefighterSequence sequence_from_json(const std::string& text) {
    json j = parse(text);
    std::string kind = j.value("kind", "");
    std::vector<Rat> vals;
    for (const auto& v : j["values"]) vals.push_back(rat_from_pair(v));
    if (kind == "explicit") return FirefighterSequence::explicit_list(std::move(vals));
    if (kind == "periodic") return FirefighterSequence::periodic(std::move(vals));
    throw ParseError("sequence kind must be explicit or periodic");
}

std::string transcript_to_json(const Transcript& tr) { return transcript_json(tr).dump(2) + "\n"; }

std::string outcome_to_json(const GameOutcome& o, bool include_transcript) {
    json j{{"saved", rat_to_string(o.saved)},
           {"saved_decimal", rat_to_decimal(o.saved)},
           {"turns", o.turns_played},
           {"contained", o.contained}};
    if (include_transcript) j["transcript"] = transcript_json(o.transcript);
    return j.dump(2) + "\n";
}

std::string targeting_to_json(const TargetingOutcome& o) {
    json divisors = json::array();
    for (const Int& d : o.divisors) divisors.push_back(d.get_str());
    json positions = json::array(), monitor = json::array();
    for (const Rat& u : o.positions) positions.push_back(rat_to_string(u));
    for (const Rat& x : o.monitor) monitor.push_back(rat_to_string(x));
    json j{{"won", o.won},       {"turn", o.turn},       {"divisors", divisors},
           {"positions", positions}, {"monitor", monitor}};
    if (!o.won) j["reason"] = o.reason;
    return j.dump(2) + "\n";
}

std::string separation_witness_to_json(const SeparationWitness& w) {
    json prefix = json::array();
    for (const Int& a : w.child_prefix) prefix.push_back(a.get_str());
    json j{{"a", json{{"prefix", prefix}, {"tail_rule", w.tail_rule}}},
           {"certificate", json{{"N", w.rank},
                                {"F_N_prime", rat_to_string(w.strong_fire_at_rank)},
                                {"F_checked_to", w.checked_to}}},
           {"first_diff", w.first_diff},
           {"method", w.method},
           {"swapped", w.swapped}};
    return j.dump(2) + "\n";
}

std::string losing_witness_to_json(const LosingWitness& w) {
    json prefix = json::array();
    for (const Int& a : w.child_prefix) prefix.push_back(a.get_str());
    json j{{"a", json{{"prefix", prefix}, {"tail_rule", w.tail_rule}}},
           {"certificate", json{{"M", w.tail_rank},
                                {"N", w.start_rank},
                                {"burn_share_sum", rat_to_string(w.burn_share_sum)},
                                {"checked_to", w.checked_to}}}};
    return j.dump(2) + "\n";
}

std::string worst_case_to_json(const std::string& instance, const std::string& strategy,
                               const WorstCase& wc) {
    json seq = json::array();
    for (long long v : wc.sequence) seq.push_back(v);
    json j{{"instance", instance},
           {"strategy", strategy},
           {"worst_sequence", seq},
           {"online_value", rat_to_string(wc.online_value)},
           {"offline_value", rat_to_string(wc.offline_value)},
           {"ratio", rat_to_string(wc.ratio)},
           {"ratio_decimal", rat_to_decimal(wc.ratio)}};
    j["fractional_value"] = wc.fractional_value ? rat_to_string(*wc.fractional_value) : "";
    return j.dump(2) + "\n";
}

std::string worst_case_csv_header() {
    return "instance,strategy,worst_sequence,online_value,offline_value,fractional_value,ratio,"
           "ratio_decimal\n";
}

std::string worst_case_to_csv(const std::string& instance, const std::string& strategy,
                              const WorstCase& wc) {
    std::ostringstream os;
    os << instance << ',' << strategy << ',' << csv_escape(wc.sequence) << ','
       << rat_to_string(wc.online_value) << ',' << rat_to_string(wc.offline_value) << ','
       << (wc.fractional_value ? rat_to_string(*wc.fractional_value) : "") << ','
       << rat_to_string(wc.ratio) << ',' << rat_to_decimal(wc.ratio) << '\n';
    return os.str();
}

std::string first_move_report_to_json(const std::string& instance, const FirstMoveReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json seq = json::array();
        for (long long v : row.sequence) seq.push_back(v);
        rows.push_back(json{{"first_move", row.first_move},
                            {"sequence_name", row.sequence_name},
                            {"sequence", seq},
                            {"online_value", rat_to_string(row.online_value)},
                            {"offline_value", rat_to_string(row.offline_value)},
                            {"ratio", rat_to_string(row.ratio)},
                            {"ratio_decimal", rat_to_decimal(row.ratio)}});
    }
    json j{{"instance", instance},
           {"rows", rows},
           {"worst_ratio_x", rat_to_string(r.worst_ratio_x)},
           {"worst_ratio_y", rat_to_string(r.worst_ratio_y)},
           {"best_online", rat_to_string(r.best_online)}};
    return j.dump(2) + "\n";
}

std::string first_move_csv_header() {
    return "instance,first_move,sequence_name,sequence,online_value,offline_value,ratio,"
           "ratio_decimal\n";
}

std::string first_move_report_to_csv(const std::string& instance, const FirstMoveReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows)
        os << instance << ',' << row.first_move << ',' << row.sequence_name << ','
           << csv_escape(row.sequence) << ',' << rat_to_string(row.online_value) << ','
           << rat_to_string(row.offline_value) << ',' << rat_to_string(row.ratio) << ','
           << rat_to_decimal(row.ratio) << '\n';
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long long> int_args(const std::string& inner, size_t expect, const std::string& what) {
    auto parts = split(inner, ',');
    if (parts.size() != expect) throw ParseError(what + " expects " + std::to_string(expect) +
                                                 " arguments");
    std::vector<long long> out;
    for (const auto& p : parts) {
        try {
            out.push_back(std::stoll(p));
        } catch (const std::exception&) {
            throw ParseError("bad integer argument '" + p + "' in " + what);
        }
    }
    return out;
}

}  // namespace

ParsedFamily parse_family(const std::string& spec) {
    auto open = spec.find('(');
    std::string name = open == std::string::npos ? spec : spec.substr(0, open);
    std::string inner;
    if (open != std::string::npos) {
        if (spec.back() != ')') throw ParseError("unbalanced family spec: " + spec);
        inner = spec.substr(open + 1, spec.size() - open - 2);
    }
    ParsedFamily out;
    if (name == "path") {
        out.finite = make_path(static_cast<int>(int_args(inner, 1, name)[0]));
    } else if (name == "star") {
        out.finite = make_star(static_cast<int>(int_args(inner, 1, name)[0]));
    } else if (name == "perfect_binary") {
        out.finite = make_perfect_binary(static_cast<int>(int_args(inner, 1, name)[0]));
    } else if (name == "spider") {
        out.finite = make_spider(static_cast<int>(int_args(inner, 1, name)[0]));
    } else if (name == "random") {
        auto a = int_args(inner, 2, name);
        out.finite = make_random(static_cast<int>(a[0]), static_cast<std::uint64_t>(a[1]));
    } else if (name == "pincer") {
        auto a = int_args(inner, 3, name);
        out.finite = make_pincer(static_cast<int>(a[0]), a[1], a[2]);
    } else if (name == "spider_inf") {
        out.level = LevelTree::spider();
    } else if (name == "width") {
        out.level = LevelTree::constant_width(int_args(inner, 1, name)[0]);
    } else if (name == "sst") {
        // sst(a1,a2,..[;rest=c]): explicit degree prefix, constant afterwards
        // (defaults to the last prefix entry).
        std::string vals = inner;
        long long rest = -1;
        auto semi = inner.find(';');
        if (semi != std::string::npos) {
            vals = inner.substr(0, semi);
            std::string tail = inner.substr(semi + 1);
            if (tail.rfind("rest=", 0) != 0) throw ParseError("sst tail must be rest=<int>");
            rest = std::stoll(tail.substr(5));
        }
        auto parts = split(vals, ',');
        auto prefix = std::make_shared<std::vector<long long>>();
        for (const auto& p : parts) prefix->push_back(std::stoll(p));
        if (prefix->empty()) throw ParseError("sst needs at least one degree");
        long long tail_val = rest < 0 ? prefix->back() : rest;
        out.level = LevelTree::spherically_symmetric(
            [prefix, tail_val](int i) {
                return i <= static_cast<int>(prefix->size())
                           ? (*prefix)[static_cast<size_t>(i - 1)]
                           : tail_val;
            },
            "sst(" + inner + ")");
    } else {
        throw ParseError("unknown family: " + name);
    }
    return out;
}

FirefighterSequence parse_sequence_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("sequence spec needs kind:values");
    std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);
    auto parse_vals = [](const std::string& s) {
        std::vector<Rat> out;
        for (const auto& p : split(s, ',')) out.push_back(rat_from_string(p));
        return out;
    };
    if (kind == "const") return FirefighterSequence::constant(rat_from_string(body));
    if (kind == "periodic") return FirefighterSequence::periodic(parse_vals(body));
    if (kind == "list") {
        auto semi = body.find(';');
        if (semi == std::string::npos)
            return FirefighterSequence::explicit_list(parse_vals(body));
        std::string tail = body.substr(semi + 1);
        if (tail.rfind("rest=", 0) != 0) throw ParseError("list tail must be rest=<value>");
        return FirefighterSequence::prefix_then_constant(parse_vals(body.substr(0, semi)),
                                                         rat_from_string(tail.substr(5)));
    }
    throw ParseError("unknown sequence kind: " + kind);
}

StrategyConfig parse_strategy_spec(const std::string& spec) {
    StrategyConfig cfg;
    auto colon = spec.find(':');
    cfg.name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    if (colon != std::string::npos) {
        for (const auto& kv : split(spec.substr(colon + 1), ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError("strategy parameter needs key=value");
            cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
    }
    return cfg;
}

std::string strategy_config_to_json(const StrategyConfig& cfg) {
    json params = json::object();
    for (const auto& [k, v] : cfg.params) params[k] = v;
    return json{{"strategy", cfg.name}, {"params", params}}.dump(2) + "\n";
}

StrategyConfig strategy_config_from_json(const std::string& text) {
    json j = parse(text);
    StrategyConfig cfg;
    cfg.name = j.value("strategy", "");
    if (cfg.name.empty()) throw ParseError("strategy JSON needs a strategy name");
    if (j.contains("params"))
        for (const auto& [k, v] : j["params"].items())
            cfg.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return cfg;
}

}  // namespace firetree
