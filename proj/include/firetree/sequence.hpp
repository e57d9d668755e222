#pragma once

#include <functional>
#include <string>
#include <vector>

#include "firetree/rational.hpp"

namespace firetree {

// Per-turn protection budget stream (f_i), 1-based. Values are exact
// non-negative rationals; prefix sums are cached.
class FirefighterSequence {
  public:
    enum class Kind { Explicit, Periodic, Rule };

    // Finite list, zero afterwards.
    static FirefighterSequence explicit_list(std::vector<Rat> values);
    // Pattern repeated forever.
    static FirefighterSequence periodic(std::vector<Rat> pattern);
    static FirefighterSequence constant(const Rat& c);
    // Arbitrary rule; `integral` must describe every value the rule yields.
    static FirefighterSequence rule(std::function<Rat(int)> fn, bool integral, std::string name);
    // Finite prefix then a constant tail.
    static FirefighterSequence prefix_then_constant(std::vector<Rat> prefix, const Rat& tail);

    Rat at(int i) const;          // f_i, i >= 1
    Rat prefix_sum(int i) const;  // S_i, S_0 = 0

    // Copy bound to the fractional game: protection may split even when all
    // budgets happen to be integers.
    FirefighterSequence as_fractional() const;

    // True when the stream belongs to the integral game (0/1 protections).
    bool integral() const { return integral_; }
    Kind kind() const { return kind_; }
    const std::vector<Rat>& values() const { return values_; }  // explicit / pattern
    const std::string& name() const { return name_; }

    std::vector<Rat> first(int n) const;  // f_1..f_n

  private:
    FirefighterSequence() = default;
    Kind kind_ = Kind::Explicit;
    std::vector<Rat> values_;
    std::function<Rat(int)> fn_;
    bool integral_ = true;
    std::string name_;
    mutable std::vector<Rat> sums_;  // sums_[i] = S_i
};

}  // namespace firetree
