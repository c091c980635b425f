#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromawalk/colors.hpp"

namespace chromawalk {

// Where the agent goes after recoloring: toward a neighbor of a given color,
// nowhere, or into termination.
struct MoveDirective {
    enum class Kind : std::uint8_t { ToColor, Stay, Stop };

    Kind kind = Kind::Stay;
    ColorId color = 0;  // meaningful only for ToColor

    static MoveDirective to_color(ColorId c) { return {Kind::ToColor, c}; }
    static MoveDirective stay() { return {Kind::Stay, 0}; }
    static MoveDirective stop() { return {Kind::Stop, 0}; }

    bool is_to_color() const { return kind == Kind::ToColor; }
    bool operator==(const MoveDirective& other) const = default;
};

std::string to_string(const MoveDirective& d, const ColorSet& colors);

struct RuleOutcome {
    ColorId new_color = 0;
    MoveDirective directive;
    int rule_id = 0;

    bool operator==(const RuleOutcome& other) const = default;
};

// One guarded entry of a rule table. Guards only inspect the neighbor-color
// multiset; the outcome may also depend on it (A_PF5 rule 2 picks d_f(M)).
struct Rule {
    int id = 0;
    ColorId current = 0;
    std::function<bool(const ColorMultiset&)> guard;
    std::function<std::pair<ColorId, MoveDirective>(const ColorMultiset&)> outcome;
};

// Raised when an execution reaches a (color, multiset) pair the table leaves
// undefined. The verifier treats this as algorithm failure, never a default.
class RuleUndefinedError : public Error {
  public:
    RuleUndefinedError(ColorId current, ColorMultiset m, const ColorSet& colors);

    ColorId current_color() const { return current_; }
    const ColorMultiset& multiset() const { return multiset_; }

  private:
    ColorId current_;
    ColorMultiset multiset_;
};

// An ordered guard list evaluated top-down, first match wins, mirroring the
// "if / else if / otherwise" layout of the printed rule tables. Evaluation is
// pure; an empty result means the table is undefined at that input.
class RuleFunction {
  public:
    RuleFunction(std::string name, ColorSet colors, std::vector<Rule> rules);

    std::optional<RuleOutcome> evaluate(ColorId current, const ColorMultiset& m) const;

    const std::string& name() const { return name_; }
    const ColorSet& colors() const { return colors_; }
    const std::vector<Rule>& rules() const { return rules_; }

    // Copy with rules_[rule_index]'s outcome replaced by a constant. Used by
    // mutation tests; guards and ordering are untouched.
    RuleFunction with_outcome(std::size_t rule_index, ColorId new_color,
                              MoveDirective directive) const;

  private:
    std::string name_;
    ColorSet colors_;
    std::vector<Rule> rules_;
};

}  // namespace chromawalk
