#include "firetree/separation.hpp"

#include <algorithm>

#include "firetree/errors.hpp"

namespace firetree {

SeqOrder compare_sequences(const FirefighterSequence& f, const FirefighterSequence& g,
                           int horizon) {
    bool strict = false;
    for (int i = 1; i <= horizon; ++i) {
        Rat sf = f.prefix_sum(i), sg = g.prefix_sum(i);
        if (sf > sg) return SeqOrder::IncomparableOnPrefix;
        if (sf < sg) strict = true;
    }
    return strict ? SeqOrder::StrictlyWeaker : SeqOrder::Weaker;
}

std::vector<Rat> fire_recurrence(const std::function<Int(int)>& child_counts,
                                 const FirefighterSequence& f, int depth) {
    std::vector<Rat> fire;
    fire.reserve(static_cast<size_t>(depth) + 1);
    fire.emplace_back(1);
    for (int i = 1; i <= depth; ++i) {
        Int a = child_counts(i);
        if (a < 1) throw InvalidInstance("child counts must be positive");
        fire.push_back(Rat(a) * fire.back() - f.at(i));
    }
    return fire;
}

std::vector<Rat> fire_recurrence(const std::vector<long long>& child_counts,
                                 const FirefighterSequence& f, int depth) {
    if (depth > static_cast<int>(child_counts.size()))
        throw InvalidInstance("recurrence depth exceeds the degree prefix");
    return fire_recurrence(
        [&](int i) { return make_int(child_counts[static_cast<size_t>(i - 1)]); }, f, depth);
}

std::optional<int> containment_rank(const std::vector<Rat>& fire) {
    for (size_t i = 1; i < fire.size(); ++i)
        if (fire[i] <= 0) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

// f^(k,eps): eps moved one turn earlier across index k. Term k+1 may be
// negative; the shifted stream never enters the game engine.
Rat shifted_at(const FirefighterSequence& f, int k, const Rat& eps, int i) {
    if (i == k) return f.at(i) + eps;
    if (i == k + 1) return f.at(i) - eps;
    return f.at(i);
}

}  // namespace

TargetBand containment_band(const std::vector<Int>& child_prefix, const FirefighterSequence& f,
                            int k, const Rat& eps) {
    if (static_cast<int>(child_prefix.size()) < k + 1)
        throw InvalidInstance("need k+1 child counts for the band");
    if (eps == 0) throw InvalidInstance("eps = 0 gives a degenerate (empty) band");
    Rat plain = 1, shifted = 1;
    for (int i = 1; i <= k + 1; ++i) {
        Rat a(child_prefix[static_cast<size_t>(i - 1)]);
        plain = a * plain - f.at(i);
        shifted = a * shifted - shifted_at(f, k, eps, i);
    }
    if (plain <= 0)
        throw InvalidInstance("prefix already contains the fire under the weak sequence");
    return TargetBand{shifted, plain};
}

TargetingOutcome targeting_single_divisor(const TargetingInstance& inst, int horizon) {
    const Rat &a = inst.lower, &b = inst.upper;
    if (!(0 < a && a < b)) throw InvalidInstance("targeting needs 0 < A < B");
    Rat threshold = a * Rat(rat_ceil(a / (b - a)));
    TargetingOutcome out;
    for (int n = 1; n <= horizon; ++n) {
        Rat s = inst.moves.prefix_sum(n);
        if (s < threshold) continue;
        // s lies in some [k'A, k'B); the smallest k' above s/B works.
        Int divisor = rat_floor(s / b) + 1;
        if (!(Rat(divisor) * a <= s && s < Rat(divisor) * b)) continue;
        out.won = true;
        out.turn = n;
        out.divisors.assign(static_cast<size_t>(n), Int(1));
        out.divisors[0] = divisor;
        Rat u = 0;
        for (int i = 1; i <= n; ++i) {
            u += inst.moves.at(i) / Rat(divisor);
            out.positions.push_back(u);
            out.monitor.push_back((b - u) * Rat(divisor));
        }
        return out;
    }
    out.reason = "prefix sums never meet A*ceil(A/(B-A)) within the horizon";
    return out;
}

TargetingOutcome targeting_greedy(const TargetingInstance& inst, int horizon) {
    const Rat &a = inst.lower, &b = inst.upper;
    if (!(0 < a && a < b)) throw InvalidInstance("targeting needs 0 < A < B");
    TargetingOutcome out;
    Rat u = 0, step = 1;
    for (int i = 1; i <= horizon; ++i) {
        Rat move = inst.moves.at(i);
        Int div(1);
        if (move > 0 && u + move * step >= b) {
            // smallest divisor keeping the position strictly below B
            div = rat_floor(move * step / (b - u)) + 1;
        }
        step /= Rat(div);
        u += move * step;
        out.divisors.push_back(div);
        out.positions.push_back(u);
        out.monitor.push_back((b - u) / step);
        if (u >= a) {
            out.won = true;
            out.turn = i;
            return out;
        }
    }
    out.reason = "position below A at the horizon";
    return out;
}

SeparatingChildCounts::SeparatingChildCounts(std::vector<Int> prefix, FirefighterSequence weak)
    : a_(std::move(prefix)), weak_(std::move(weak)) {
    fire_.emplace_back(1);
    for (size_t i = 0; i < a_.size(); ++i)
        fire_.push_back(Rat(a_[i]) * fire_.back() - weak_.at(static_cast<int>(i) + 1));
}

void SeparatingChildCounts::extend(int i) {
    while (static_cast<int>(a_.size()) < i) {
        int next = static_cast<int>(a_.size()) + 1;
        const Rat& prev = fire_.back();
        if (prev <= 0)
            throw ConstructionFailure("tail rule undefined: fire already out at level " +
                                      std::to_string(next - 1));
        Int a = rat_floor(weak_.at(next) / prev) + 1;
        a_.push_back(a);
        fire_.push_back(Rat(a) * prev - weak_.at(next));
    }
}

Int SeparatingChildCounts::at(int i) {
    if (i < 1) throw InvalidInstance("child counts start at index 1");
    extend(i);
    return a_[static_cast<size_t>(i - 1)];
}

Rat SeparatingChildCounts::fire_at(int i) {
    if (i < 0) throw InvalidInstance("negative level");
    extend(i);
    return fire_[static_cast<size_t>(i)];
}

void verify_separation(const SeparationWitness& w, const FirefighterSequence& weak,
                       const FirefighterSequence& strong) {
    SeparatingChildCounts counts(w.child_prefix, weak);
    for (int i = 1; i <= w.checked_to; ++i)
        if (counts.fire_at(i) <= 0)
            throw ConstructionFailure("weak sequence contains the fire at level " +
                                      std::to_string(i));
    auto strong_fire = fire_recurrence([&](int i) { return counts.at(i); }, strong, w.rank);
    if (strong_fire[static_cast<size_t>(w.rank)] > 0)
        throw ConstructionFailure("strong sequence did not contain the fire by the rank");
}

SeparationWitness separate_integral(const FirefighterSequence& f, const FirefighterSequence& g,
                                    int horizon) {
    if (!f.integral() || !g.integral())
        throw InvalidInstance("integral separation needs integral sequences");
    int k = 0;
    for (int i = 1; i <= horizon && k == 0; ++i)
        if (f.at(i) != g.at(i)) k = i;
    if (k == 0) throw ConstructionFailure("sequences are equal on the inspected prefix");

    bool swapped = f.at(k) > g.at(k);
    const FirefighterSequence& weak = swapped ? g : f;
    SeparationWitness w;
    w.swapped = swapped;
    w.method = "integral";
    w.first_diff = k;
    w.rank = k;
    for (int i = 1; i <= k; ++i) w.child_prefix.push_back(weak.at(i).get_num() + 1);
    w.checked_to = std::max(horizon, 10 * k);
    verify_separation(w, weak, swapped ? f : g);
    auto strong_fire =
        fire_recurrence([&](int i) { return w.child_prefix[static_cast<size_t>(i - 1)]; },
                        swapped ? f : g, k);
    w.strong_fire_at_rank = strong_fire[static_cast<size_t>(k)];
    return w;
}

SeparationWitness construct_separating(const FirefighterSequence& f, const FirefighterSequence& g,
                                       int horizon) {
    int k = 0;
    for (int i = 1; i <= horizon && k == 0; ++i)
        if (f.at(i) != g.at(i)) k = i;
    if (k == 0) throw ConstructionFailure("sequences are equal on the inspected prefix");
    if (compare_sequences(f, g, horizon) == SeqOrder::IncomparableOnPrefix)
        throw InvalidInstance("construction needs the first sequence weaker than the second");
    Rat eps = g.at(k) - f.at(k);

    // Minimal-degree prefix keeping the weak fire alive, then a_{k+1} >= 2.
    SeparationWitness w;
    w.first_diff = k;
    std::vector<Int> prefix;
    Rat fire = 1;
    for (int i = 1; i <= k; ++i) {
        Int a = rat_floor(f.at(i) / fire) + 1;
        prefix.push_back(a);
        fire = Rat(a) * fire - f.at(i);
    }
    Int ak1 = std::max(Int(2), Int(rat_floor(f.at(k + 1) / fire) + 1));
    prefix.push_back(ak1);
    TargetBand band = containment_band(prefix, f, k, eps);

    if (band.lower <= 0) {
        // Edge mode: the shifted mass is already non-positive at k+1, the
        // prefix alone separates.
        w.method = "prefix_only";
        w.rank = k + 1;
        w.child_prefix = prefix;
    } else {
        // Targeting game over the moves f_{k+2}, f_{k+3}, ...
        FirefighterSequence shifted_moves = FirefighterSequence::rule(
            [f, k](int i) { return f.at(i + k + 1); }, f.integral(), "shift");
        TargetingInstance inst{band.lower, band.upper, shifted_moves};
        int game_horizon = horizon > k + 1 ? horizon - k - 1 : 0;

        // Greedy wins with log2(B/(B-A)) moves reaching B; preferred since
        // its divisors come from the same floor rule as the prefix.
        int needed = 0;
        {
            Rat pow = band.upper - band.lower;  // (B-A) * 2^c
            while (pow < band.upper) {
                pow *= 2;
                ++needed;
            }
        }
        int heavy = 0;
        bool greedy_ok = false;
        for (int i = 1; i <= game_horizon && !greedy_ok; ++i)
            if (shifted_moves.at(i) >= band.upper) greedy_ok = ++heavy >= needed;
        TargetingOutcome game;
        if (greedy_ok) {
            w.method = "greedy";
            game = targeting_greedy(inst, game_horizon);
        } else {
            Rat threshold = band.lower * Rat(rat_ceil(band.lower / (band.upper - band.lower)));
            bool divergent_ok = shifted_moves.prefix_sum(game_horizon) >= threshold;
            if (!divergent_ok)
                throw ConstructionFailure(
                    "neither targeting hypothesis is met within the horizon");
            w.method = "single_divisor";
            game = targeting_single_divisor(inst, game_horizon);
        }
        if (!game.won) throw ConstructionFailure("targeting strategy failed: " + game.reason);
        w.rank = k + 1 + game.turn;
        w.child_prefix = prefix;
        for (const Int& d : game.divisors) w.child_prefix.push_back(d);
        w.child_prefix.resize(static_cast<size_t>(w.rank));
    }

    w.checked_to = std::max(horizon, 10 * w.rank);
    verify_separation(w, f, g);
    SeparatingChildCounts counts(w.child_prefix, f);
    auto strong_fire = fire_recurrence([&](int i) { return counts.at(i); }, g, w.rank);
    w.strong_fire_at_rank = strong_fire[static_cast<size_t>(w.rank)];
    return w;
}

LosingWitness build_losing_instance(const GrowthSequence& levels, const FirefighterSequence& f,
                                    int horizon, const TailBound& tail, int tail_guard) {
    auto level_at = [&](int i) {
        Int t = levels(i);
        if (t < 1) throw InvalidInstance("level growth values must be positive");
        return t;
    };
    // M: certified tail below 1/4, cross-checked against the observed prefix.
    int m = -1;
    Rat quarter(1, 4);
    for (int cand = 0; cand <= tail_guard && m < 0; ++cand) {
        auto bound = tail ? tail(cand) : std::nullopt;
        if (bound && *bound < quarter) m = cand;
    }
    if (m < 0) {
        Rat observed = 0;
        for (int i = tail_guard + 1; i <= horizon; ++i)
            observed += f.at(i) / Rat(level_at(i));
        if (observed >= quarter)
            throw ConstructionFailure(
                "divergence detected: observed tails stay above 1/4 up to the guard");
        throw ConstructionFailure("tail bound not certifiable: supply a tail witness");
    }
    Rat observed_tail = 0;
    for (int i = m + 1; i <= horizon; ++i) observed_tail += f.at(i) / Rat(level_at(i));
    if (*tail(m) < observed_tail)
        throw InvalidInstance("tail witness contradicted on the inspected prefix");

    Rat s_m = f.prefix_sum(m);
    int n = -1;
    for (int cand = m + 1; cand <= std::max(horizon, 4 * (m + 1)) + tail_guard; ++cand)
        if (Rat(level_at(cand)) > 4 * s_m) {
            n = cand;
            break;
        }
    if (n < 0) throw GuardExceeded("no rank with t_N > 4*S_M found within the scan bound");

    LosingWitness w;
    w.tail_rank = m;
    w.start_rank = n;
    w.child_prefix.assign(static_cast<size_t>(n), Int(1));
    w.child_prefix[0] = level_at(n);
    w.checked_to = horizon;

    // Certificates: level sizes track t_i within a factor two from N on, and
    // the burn shares never add up to 1.
    Int size = 1;
    Rat sum = 0;
    auto counts = losing_child_counts(w, levels);
    for (int i = 1; i <= horizon; ++i) {
        size *= counts(i);
        if (i >= n) {
            Int t = level_at(i);
            if (!(2 * size >= t && size <= t))
                throw ConstructionFailure("level size left the [t/2, t] corridor at " +
                                          std::to_string(i));
        }
        sum += f.at(i) / Rat(size);
        if (sum >= 1)
            throw ConstructionFailure("burn shares reached 1 at level " + std::to_string(i));
    }
    w.burn_share_sum = sum;
    return w;
}

std::function<Int(int)> losing_child_counts(const LosingWitness& w, const GrowthSequence& levels) {
    auto prefix = std::make_shared<std::vector<Int>>(w.child_prefix);
    auto sizes = std::make_shared<std::vector<Int>>();  // sizes[i] = |T_i|, sizes[0] = 1
    sizes->emplace_back(1);
    for (const Int& a : *prefix) sizes->push_back(sizes->back() * a);
    return [prefix, sizes, levels](int i) -> Int {
        if (i < 1) throw InvalidInstance("child counts start at index 1");
        while (static_cast<int>(prefix->size()) < i) {
            int next = static_cast<int>(prefix->size()) + 1;
            Int a = levels(next) / sizes->back();  // floor(t_i / |T_{i-1}|)
            if (a < 1) throw ConstructionFailure("tail rule produced a childless level");
            prefix->push_back(a);
            sizes->push_back(sizes->back() * a);
        }
        return (*prefix)[static_cast<size_t>(i - 1)];
    };
}

}  // namespace firetree
