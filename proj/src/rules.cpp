#include "chromawalk/rules.hpp"

namespace chromawalk {

std::string to_string(const MoveDirective& d, const ColorSet& colors) {
    switch (d.kind) {
        case MoveDirective::Kind::Stay:
            return "stay";
        case MoveDirective::Kind::Stop:
            return "stop";
        case MoveDirective::Kind::ToColor:
            return colors.name(d.color);
    }
    return "?";
}

RuleUndefinedError::RuleUndefinedError(ColorId current, ColorMultiset m, const ColorSet& colors)
    : Error("rule undefined for (" + colors.name(current) + ", " + to_string(m, colors) + ")"),
      current_(current),
      multiset_(std::move(m)) {}

RuleFunction::RuleFunction(std::string name, ColorSet colors, std::vector<Rule> rules)
    : name_(std::move(name)), colors_(std::move(colors)), rules_(std::move(rules)) {
    for (const auto& rule : rules_) {
        if (rule.current >= colors_.size() || !rule.guard || !rule.outcome) {
            throw InputError("malformed rule " + std::to_string(rule.id));
        }
    }
}

std::optional<RuleOutcome> RuleFunction::evaluate(ColorId current, const ColorMultiset& m) const {
    for (const auto& rule : rules_) {
        if (rule.current != current) {
            continue;
        }
        if (rule.guard(m)) {
            auto [color, directive] = rule.outcome(m);
            return RuleOutcome{color, directive, rule.id};
        }
    }
    return std::nullopt;
}

RuleFunction RuleFunction::with_outcome(std::size_t rule_index, ColorId new_color,
                                        MoveDirective directive) const {
    if (rule_index >= rules_.size()) {
        throw InputError("rule index out of range");
    }
    auto rules = rules_;
    rules[rule_index].outcome = [new_color, directive](const ColorMultiset&) {
        return std::make_pair(new_color, directive);
    };
    return RuleFunction(name_ + "+mut" + std::to_string(rule_index), colors_, std::move(rules));
}

}  // namespace chromawalk
