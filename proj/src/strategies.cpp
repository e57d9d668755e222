#include "firetree/strategies.hpp"

#include <algorithm>
#include <climits>

#include "firetree/errors.hpp"

namespace firetree {

namespace {

std::vector<int> sorted_by_weight(const RootedTree& t, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
        if (t.weight(u) != t.weight(v)) return t.weight(u) > t.weight(v);
        return u < v;
    });
    return verts;
}

long long units_of(const Rat& budget) {
    if (!rat_is_integer(budget) || budget < 0)
        throw InvalidInstance("integral strategy received budget " + rat_to_string(budget));
    return static_cast<long long>(budget.get_num().get_si());
}

}  // namespace

Allocation GreedyWeightStrategy::allocate(const GameState& s, const RootedTree& t,
                                          const Rat& budget) {
    Allocation a;
    Rat remaining = budget;
    for (int v : sorted_by_weight(t, t.level(s.turn()))) {
        if (remaining == 0) break;
        Rat cap = s.remaining_cap(v);
        Rat amt = std::min(remaining, cap);
        if (amt > 0) {
            a.add(v, amt);
            remaining -= amt;
        }
    }
    return a;
}

Allocation DegreeGreedyStrategy::allocate(const GameState& s, const RootedTree& t,
                                          const Rat& budget) {
    long long units = units_of(budget);
    std::vector<int> verts = t.level(s.turn());
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
        if (t.degree(u) != t.degree(v)) return t.degree(u) > t.degree(v);
        return u < v;
    });
    Allocation a;
    for (int v : verts) {
        if (units == 0) break;
        if (s.remaining_cap(v) == 1) {
            a.add(v, 1);
            --units;
        }
    }
    return a;
}

FirstMoveInfo phi_first_choice(const RootedTree& t, const std::vector<int>& frontier,
                               int levels_below) {
    FirstMoveInfo info;
    if (frontier.empty()) return info;
    std::vector<int> order = sorted_by_weight(t, frontier);
    info.heavy = order[0];
    info.runner = order.size() > 1 ? order[1] : order[0];
    if (info.heavy == info.runner) {
        info.chosen = info.heavy;
        info.min_ratio = 1;
        return info;
    }
    // Depth-indexed maximum weights inside the two heaviest branches.
    auto depth_max = [&](int v) {
        std::vector<long long> best(static_cast<size_t>(t.subtree_height(v)) + 1, 0);
        std::vector<std::pair<int, int>> stack{{v, 0}};
        while (!stack.empty()) {
            auto [u, d] = stack.back();
            stack.pop_back();
            best[static_cast<size_t>(d)] = std::max(best[static_cast<size_t>(d)], t.weight(u));
            for (int c : t.children(u)) stack.emplace_back(c, d + 1);
        }
        return best;
    };
    std::vector<long long> da = depth_max(info.heavy), db = depth_max(info.runner);
    auto at = [](const std::vector<long long>& v, int d) {
        return d < static_cast<int>(v.size()) ? v[static_cast<size_t>(d)] : 0LL;
    };
    bool take_heavy = true;
    bool have_min = false;
    for (int i = 2; i <= 1 + levels_below; ++i) {
        Int p = make_int(t.weight(info.heavy)) + make_int(at(db, i - 1));
        Int q = make_int(t.weight(info.runner)) + make_int(at(da, i - 1));
        Rat ratio(p, q);
        ratio.canonicalize();
        if (!have_min || ratio < info.min_ratio) {
            info.min_ratio = ratio;
            have_min = true;
        }
        if (phi_certificate(p, q) < 0) take_heavy = false;
    }
    info.chosen = take_heavy ? info.heavy : info.runner;
    return info;
}

void PhiThresholdStrategy::start(const RootedTree&, const LevelTree*) {
    first_pending_ = true;
    first_.reset();
}

Allocation PhiThresholdStrategy::allocate(const GameState& s, const RootedTree& t,
                                          const Rat& budget) {
    long long units = units_of(budget);
    Allocation a;
    if (units == 0) return a;
    // Children of the updated root: level vertices that are neither inside a
    // protected subtree nor already picked this turn.
    std::vector<int> frontier;
    for (int v : t.level(s.turn()))
        if (s.remaining_cap(v) == 1) frontier.push_back(v);
    for (long long u = 0; u < units && !frontier.empty(); ++u) {
        int pick;
        if (first_pending_) {
            int levels_below = 0;
            for (int v : frontier)
                levels_below = std::max(levels_below, 1 + t.subtree_height(v));
            FirstMoveInfo info = phi_first_choice(t, frontier, levels_below);
            first_ = info;
            pick = info.chosen;
            first_pending_ = false;
        } else {
            pick = sorted_by_weight(t, frontier)[0];
        }
        a.add(pick, 1);
        frontier.erase(std::find(frontier.begin(), frontier.end(), pick));
    }
    return a;
}

Allocation EvenSpreadStrategy::allocate(const GameState& s, const RootedTree& t,
                                        const Rat& budget) {
    const auto& level = t.level(s.turn());
    Allocation a;
    if (level.empty() || budget == 0) return a;
    Rat share = budget / make_rat(static_cast<long long>(level.size()));
    for (int v : level) {
        Rat amt = std::min(share, s.remaining_cap(v));
        if (amt > 0) a.add(v, amt);
    }
    return a;
}

LevelTargetStrategy::LevelTargetStrategy(LevelTargetConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.sigma) {
        cfg_.sigma = [](int i) { return i; };
        cfg_.sigma_name = "id";
    }
}

void LevelTargetStrategy::start(const RootedTree& t, const LevelTree*) {
    tree_ = &t;
    target_ = -1;
    rank_n_ = -1;
    target_descendants_.clear();
}

void LevelTargetStrategy::start_offline(const FirefighterSequence& f, int horizon) {
    const RootedTree& t = *tree_;
    const Rat& c = cfg_.growth_const;
    if (c <= 0) throw InvalidInstance("level_target needs C > 0");
    auto sigma_at = [&](int i) {
        if (i == 0) return 0;
        int v = cfg_.sigma(i);
        if (v <= 0) throw InvalidInstance("sigma must be positive for i >= 1");
        return v;
    };
    auto level_size = [&](int lvl) -> long long {
        if (lvl > t.height())
            throw InvalidInstance("prefix too shallow for the sigma witness; raise the horizon");
        return static_cast<long long>(t.level(lvl).size());
    };
    auto check_witness = [&](int i) {
        int lvl = sigma_at(i);
        if (make_rat(level_size(lvl)) > c * f.prefix_sum(lvl))
            throw InvalidInstance("witness violation: |T_" + std::to_string(lvl) + "| > C*S_" +
                                  std::to_string(lvl));
    };

    // N: first rank where the proof's product passes 2C.
    Rat product = 1;
    int n_rank = -1;
    for (int i = 1; i <= cfg_.search_guard; ++i) {
        if (sigma_at(i) > t.height() || sigma_at(i) > horizon)
            throw InvalidInstance("sigma witness exhausted the prefix before the product passed 2C");
        check_witness(i);
        Rat s_cur = f.prefix_sum(sigma_at(i));
        Rat s_prev = f.prefix_sum(sigma_at(i - 1));
        product *= Rat(1) + (s_cur - s_prev) / (c * s_cur);
        if (product > 2 * c) {
            n_rank = i;
            break;
        }
    }
    if (n_rank < 0) throw GuardExceeded("level_target product rank not found within guard");
    rank_n_ = n_rank;

    // h: first rank whose prefix sum doubles S_sigma(N).
    Rat bound = 2 * f.prefix_sum(sigma_at(n_rank));
    int h_rank = -1;
    for (int i = n_rank; i <= cfg_.search_guard; ++i) {
        if (sigma_at(i) > t.height() || sigma_at(i) > horizon)
            throw InvalidInstance("sigma witness exhausted the prefix before S doubled");
        check_witness(i);
        if (f.prefix_sum(sigma_at(i)) > bound) {
            h_rank = i;
            break;
        }
    }
    if (h_rank < 0) throw GuardExceeded("level_target target rank not found within guard");
    target_ = sigma_at(h_rank);

    // Descendant counts towards the target level.
    target_descendants_.assign(static_cast<size_t>(t.vertex_count()), 0);
    for (int v : t.level(target_)) target_descendants_[static_cast<size_t>(v)] = 1;
    for (int lvl = target_ - 1; lvl >= 0; --lvl)
        for (int v : t.level(lvl))
            for (int ch : t.children(v))
                target_descendants_[static_cast<size_t>(v)] +=
                    target_descendants_[static_cast<size_t>(ch)];
}

Allocation LevelTargetStrategy::allocate(const GameState& s, const RootedTree& t,
                                         const Rat& budget) {
    std::vector<int> verts = t.level(s.turn());
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
        long long cu = target_descendants_[static_cast<size_t>(u)];
        long long cv = target_descendants_[static_cast<size_t>(v)];
        if (cu != cv) return cu > cv;
        return u < v;
    });
    Allocation a;
    Rat remaining = budget;
    for (int v : verts) {
        if (remaining == 0) break;
        Rat amt = std::min(remaining, s.remaining_cap(v));
        if (amt > 0) {
            a.add(v, amt);
            remaining -= amt;
        }
    }
    return a;
}

std::optional<long long> escalation_rounds(const Rat& growth_const, const Int& modulus,
                                           long long guard) {
    // prod (Cnj-1)/(Cnj) < 1/(2Cn), C = p/q: numerator *= pnj - q,
    // denominator *= pnj; compare num * 2pn < den * q.
    Int p = growth_const.get_num(), q = growth_const.get_den();
    Int pn = p * modulus;
    if (pn <= q) throw InvalidInstance("linear_growth needs C*n > 1");
    Int num = 1, den = 1;
    Int lhs_factor = 2 * pn;
    for (long long j = 1; j <= guard; ++j) {
        num *= pn * make_int(j) - q;
        den *= pn * make_int(j);
        if (num * lhs_factor < den * q) return j;
    }
    return std::nullopt;
}

LinearGrowthStrategy::LinearGrowthStrategy(LinearGrowthConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.growth_const <= 1) throw InvalidInstance("linear_growth needs C > 1");
    if (cfg_.start_modulus < 1) throw InvalidInstance("linear_growth needs n_0 >= 1");
}

void LinearGrowthStrategy::set_phase(const Int& modulus) {
    modulus_ = modulus;
    auto rounds = escalation_rounds(cfg_.growth_const, modulus, cfg_.product_guard);
    if (rounds) {
        Int h = 2 * modulus * make_int(*rounds);
        phase_end_ = h.fits_slong_p() ? h.get_si() : -1;
    } else {
        phase_end_ = -1;  // beyond guard: keep playing greedily, never escalate
    }

    // Target level for descendant counts: h(n_k) clamped to what the prefix
    // guard affords. Without a phase horizon the deepest materialized level
    // serves as the target.
    long long want = phase_end_;
    if (want < 0)
        want = level_tree_ != nullptr ? level_tree_->materialized_depth() : tree_->height();
    if (level_tree_ != nullptr) {
        int depth = level_tree_->materialized_depth();
        while (depth < want && level_tree_->vertex_count() < cfg_.prefix_guard) {
            try {
                level_tree_->materialize(depth + 1);
            } catch (const GuardExceeded&) {
                break;
            }
            ++depth;
        }
        target_ = depth;
        target_descendants_.assign(static_cast<size_t>(level_tree_->vertex_count()), 0);
        const LevelTree& lt = *level_tree_;
        for (long long v = lt.vertex_count() - 1; v >= 1; --v) {
            if (lt.level_of(v) == target_) target_descendants_[static_cast<size_t>(v)] = 1;
            target_descendants_[static_cast<size_t>(lt.parent(v))] +=
                target_descendants_[static_cast<size_t>(v)];
        }
    } else {
        target_ = static_cast<int>(std::min<long long>(want, tree_->height()));
        target_descendants_.assign(static_cast<size_t>(tree_->vertex_count()), 0);
        for (int v : tree_->level(target_)) target_descendants_[static_cast<size_t>(v)] = 1;
        for (int lvl = target_ - 1; lvl >= 0; --lvl)
            for (int v : tree_->level(lvl))
                for (int ch : tree_->children(v))
                    target_descendants_[static_cast<size_t>(v)] +=
                        target_descendants_[static_cast<size_t>(ch)];
    }
}

void LinearGrowthStrategy::start(const RootedTree& t, const LevelTree* lt) {
    tree_ = &t;
    level_tree_ = lt;
    received_ = 0;
    received_at_phase_end_ = 0;
    set_phase(Int(static_cast<long>(cfg_.start_modulus)));
    initial_phase_end_ = phase_end_;
}

void LinearGrowthStrategy::observe(int turn, const Rat& budget) {
    received_ += budget;
    if (phase_end_ > 0 && turn == phase_end_) received_at_phase_end_ = received_;
}

Allocation LinearGrowthStrategy::allocate(const GameState& s, const RootedTree& t,
                                          const Rat& budget) {
    if (phase_end_ > 0 && s.turn() > phase_end_) {
        // Fire survived phase k: escalate the modulus, prior turns wasted.
        Int next = Int(static_cast<long>(phase_end_)) * (rat_ceil(received_at_phase_end_) + 1);
        set_phase(next);
    }
    long long units = units_of(budget);
    Allocation a;
    if (units == 0) return a;
    std::vector<int> verts;
    for (int v : t.level(s.turn()))
        if (s.remaining_cap(v) == 1) verts.push_back(v);
    auto count_of = [&](int v) {
        return static_cast<size_t>(v) < target_descendants_.size()
                   ? target_descendants_[static_cast<size_t>(v)]
                   : 0LL;
    };
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
        if (count_of(u) != count_of(v)) return count_of(u) > count_of(v);
        return u < v;
    });
    for (int v : verts) {
        if (units == 0) break;
        a.add(v, 1);
        --units;
    }
    return a;
}

std::unique_ptr<Strategy> make_strategy(const StrategyConfig& cfg) {
    auto param = [&](const std::string& key, const std::string& dflt) {
        auto it = cfg.params.find(key);
        return it == cfg.params.end() ? dflt : it->second;
    };
    if (cfg.name == "gr") return std::make_unique<GreedyWeightStrategy>();
    if (cfg.name == "degree") return std::make_unique<DegreeGreedyStrategy>();
    if (cfg.name == "algo2") return std::make_unique<PhiThresholdStrategy>();
    if (cfg.name == "even") return std::make_unique<EvenSpreadStrategy>();
    if (cfg.name == "level_target") {
        LevelTargetConfig c;
        c.growth_const = rat_from_string(param("C", "2"));
        std::string sigma = param("sigma", "id");
        if (sigma == "id") {
            c.sigma = [](int i) { return i; };
        } else if (sigma.rfind("stride:", 0) == 0) {
            int m = std::stoi(sigma.substr(7));
            if (m < 1) throw ParseError("sigma stride must be positive");
            c.sigma = [m](int i) { return m * i; };
        } else {
            throw ParseError("unknown sigma spec: " + sigma);
        }
        c.sigma_name = sigma;
        return std::make_unique<LevelTargetStrategy>(std::move(c));
    }
    if (cfg.name == "linear_growth") {
        LinearGrowthConfig c;
        c.growth_const = rat_from_string(param("C", "2"));
        c.start_modulus = std::stoll(param("n0", "100"));
        c.product_guard = std::stoll(param("product_guard", "20000"));
        c.prefix_guard = std::stoll(param("prefix_guard", "2000000"));
        return std::make_unique<LinearGrowthStrategy>(c);
    }
    throw ParseError("unknown strategy: " + cfg.name);
}

}  // namespace firetree
