#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "chromawalk/graph.hpp"
#include "chromawalk/rules.hpp"

namespace chromawalk {

// Global state: where the agent is, what every node is colored, and whether
// the execution has terminated. Value-semantic; steps build new ones.
struct Configuration {
    NodeId agent = 0;
    std::vector<ColorId> coloring;
    bool terminated = false;

    bool operator==(const Configuration& other) const = default;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

enum class TerminationKind : std::uint8_t { StopDirective, AbsentColor };

std::string_view to_string(TerminationKind k);

// Everything needed to replay one step bit-exactly.
struct StepRecord {
    std::uint64_t time = 0;
    NodeId node = 0;
    ColorId color_before = 0;
    ColorId color_after = 0;
    int rule_id = 0;
    MoveDirective directive;
    std::optional<NodeId> chosen;  // set iff the agent actually moved to a color
    std::optional<TerminationKind> terminated_by;
};

struct Trace {
    Graph graph;
    NodeId start = 0;
    std::vector<StepRecord> steps;
    Configuration final_config;
};

// Resolves a move directive to one concrete neighbor among equally-colored
// candidates. Rule functions never see node ids; adversaries do.
using AdversaryFn = std::function<NodeId(const std::vector<NodeId>& candidates)>;

AdversaryFn lowest_adversary();
AdversaryFn highest_adversary();
AdversaryFn random_adversary(std::uint64_t seed);
// Consumes the given node ids in order; throws AdversaryError when exhausted
// or when a scripted choice is not a candidate.
AdversaryFn scripted_adversary(std::vector<NodeId> choices);
// Adversary that re-plays the chosen nodes recorded in a trace.
AdversaryFn replay_adversary(const Trace& trace);

Configuration initial_configuration(const Graph& graph, NodeId start, const ColorSet& colors);

// The agent's observation: its node's color plus the neighbor-color multiset.
std::pair<ColorId, ColorMultiset> observe(const Graph& graph, const Configuration& config);

// Neighbors of the agent currently bearing `target`.
std::vector<NodeId> candidates(const Graph& graph, const Configuration& config, ColorId target);

// One rule application, split from the adversary choice so the checker can
// branch over all candidates.
struct Expansion {
    RuleOutcome outcome;
    std::vector<NodeId> move_candidates;  // nonempty only for a ToColor move
    std::optional<TerminationKind> termination;

    bool terminates() const { return termination.has_value(); }
    bool needs_choice() const { return !move_candidates.empty(); }
};

// Observes and evaluates the rule function; throws RuleUndefinedError if the
// table has no entry. Candidate colors are read before any recoloring.
Expansion expand(const Graph& graph, const Configuration& config, const RuleFunction& rules);

struct StepResult {
    Configuration config;
    StepRecord record;
};

// Applies an expansion: recolors the agent's node in all cases, then moves,
// stays, or terminates. `chosen` is required exactly when a choice is needed
// and must be one of the candidates.
StepResult apply_expansion(const Graph& graph, const Configuration& config, const Expansion& exp,
                           std::optional<NodeId> chosen, std::uint64_t time);

StepResult step(const Graph& graph, const Configuration& config, const RuleFunction& rules,
                const AdversaryFn& choose, std::uint64_t time = 0);

// Backstop for randomized runs; exhaustive checking uses loop detection.
std::uint64_t default_step_cap(const Graph& graph);  // 100*n*m + 100

struct RunResult {
    Trace trace;
    bool cap_exceeded = false;
};

RunResult run(const Graph& graph, const RuleFunction& rules, NodeId start, const AdversaryFn& choose,
              std::uint64_t step_cap);
RunResult run(const Graph& graph, const RuleFunction& rules, NodeId start, const AdversaryFn& choose);

// Re-derives the configuration sequence of a trace by applying its records,
// without consulting any rule function. visit(config, last_step, time) is
// called for the initial configuration (last_step == nullptr) and after each
// step. Returns the last configuration.
Configuration walk_trace(
    const Trace& trace,
    const std::function<void(const Configuration&, const StepRecord*, std::uint64_t)>& visit);

}  // namespace chromawalk
