#include "firetree/sequence.hpp"

#include <memory>

#include "firetree/errors.hpp"

namespace firetree {

namespace {
void check_non_negative(const std::vector<Rat>& vs) {
    for (const Rat& v : vs)
        if (v < 0) throw InvalidInstance("firefighter sequence values must be non-negative");
}
bool all_integral(const std::vector<Rat>& vs) {
    for (const Rat& v : vs)
        if (!rat_is_integer(v)) return false;
    return true;
}
std::string join(const std::vector<Rat>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += rat_to_string(vs[i]);
    }
    return s;
}
}  // namespace

FirefighterSequence FirefighterSequence::explicit_list(std::vector<Rat> values) {
    check_non_negative(values);
    FirefighterSequence f;
    f.kind_ = Kind::Explicit;
    f.integral_ = all_integral(values);
    f.name_ = "list(" + join(values) + ")";
    f.values_ = std::move(values);
    return f;
}

FirefighterSequence FirefighterSequence::periodic(std::vector<Rat> pattern) {
    if (pattern.empty()) throw InvalidInstance("empty periodic pattern");
    check_non_negative(pattern);
    FirefighterSequence f;
    f.kind_ = Kind::Periodic;
    f.integral_ = all_integral(pattern);
    f.name_ = "periodic(" + join(pattern) + ")";
    f.values_ = std::move(pattern);
    return f;
}

FirefighterSequence FirefighterSequence::constant(const Rat& c) { return periodic({c}); }

FirefighterSequence FirefighterSequence::rule(std::function<Rat(int)> fn, bool integral,
                                              std::string name) {
    if (!fn) throw InvalidInstance("null sequence rule");
    FirefighterSequence f;
    f.kind_ = Kind::Rule;
    f.fn_ = std::move(fn);
    f.integral_ = integral;
    f.name_ = std::move(name);
    return f;
}

FirefighterSequence FirefighterSequence::prefix_then_constant(std::vector<Rat> prefix,
                                                              const Rat& tail) {
    check_non_negative(prefix);
    if (tail < 0) throw InvalidInstance("firefighter sequence values must be non-negative");
    bool integral = all_integral(prefix) && rat_is_integer(tail);
    std::string name = "list(" + join(prefix) + ";rest=" + rat_to_string(tail) + ")";
    auto vals = std::make_shared<std::vector<Rat>>(std::move(prefix));
    Rat t = tail;
    return rule(
        [vals, t](int i) {
            return i <= static_cast<int>(vals->size()) ? (*vals)[static_cast<size_t>(i - 1)] : t;
        },
        integral, std::move(name));
}

FirefighterSequence FirefighterSequence::as_fractional() const {
    FirefighterSequence f = *this;
    f.integral_ = false;
    f.sums_.clear();
    return f;
}

Rat FirefighterSequence::at(int i) const {
    if (i < 1) throw InvalidInstance("sequence index starts at 1");
    Rat v;
    switch (kind_) {
        case Kind::Explicit:
            v = i <= static_cast<int>(values_.size()) ? values_[static_cast<size_t>(i - 1)]
                                                      : Rat(0);
            break;
        case Kind::Periodic:
            v = values_[static_cast<size_t>((i - 1) % static_cast<int>(values_.size()))];
            break;
        case Kind::Rule:
            v = fn_(i);
            break;
    }
    if (v < 0) throw InvalidInstance("sequence rule produced a negative value");
    if (integral_ && !rat_is_integer(v))
        throw InvalidInstance("sequence declared integral produced " + rat_to_string(v));
    return v;
}

Rat FirefighterSequence::prefix_sum(int i) const {
    if (i < 0) throw InvalidInstance("negative prefix index");
    if (sums_.empty()) sums_.push_back(Rat(0));
    while (static_cast<int>(sums_.size()) <= i)
        sums_.push_back(sums_.back() + at(static_cast<int>(sums_.size())));
    return sums_[static_cast<size_t>(i)];
}

std::vector<Rat> FirefighterSequence::first(int n) const {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(at(i));
    return out;
}

}  // namespace firetree
