#include "chromawalk/engine.hpp"

#include <algorithm>
#include <memory>
#include <random>

namespace chromawalk {

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    // FNV-1a over agent, terminated flag, and the coloring bytes.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    mix(c.agent & 0xff);
    mix((c.agent >> 8) & 0xff);
    mix((c.agent >> 16) & 0xff);
    mix((c.agent >> 24) & 0xff);
    mix(c.terminated ? 1 : 0);
    for (ColorId col : c.coloring) {
        mix(col);
    }
    return static_cast<std::size_t>(h);
}

std::string_view to_string(TerminationKind k) {
    switch (k) {
        case TerminationKind::StopDirective:
            return "stop-directive";
        case TerminationKind::AbsentColor:
            return "absent-color";
    }
    return "?";
}

AdversaryFn lowest_adversary() {
    return [](const std::vector<NodeId>& cands) { return cands.front(); };
}

AdversaryFn highest_adversary() {
    return [](const std::vector<NodeId>& cands) { return cands.back(); };
}

AdversaryFn random_adversary(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const std::vector<NodeId>& cands) {
        std::uniform_int_distribution<std::size_t> dist(0, cands.size() - 1);
        return cands[dist(*rng)];
    };
}

AdversaryFn scripted_adversary(std::vector<NodeId> choices) {
    auto state = std::make_shared<std::pair<std::vector<NodeId>, std::size_t>>(std::move(choices),
                                                                               0);
    return [state](const std::vector<NodeId>& cands) {
        if (state->second >= state->first.size()) {
            throw AdversaryError("scripted adversary exhausted after " +
                                 std::to_string(state->second) + " choices");
        }
        return state->first[state->second++];
    };
}

AdversaryFn replay_adversary(const Trace& trace) {
    std::vector<NodeId> choices;
    for (const auto& rec : trace.steps) {
        if (rec.chosen) {
            choices.push_back(*rec.chosen);
        }
    }
    return scripted_adversary(std::move(choices));
}

Configuration initial_configuration(const Graph& graph, NodeId start, const ColorSet& colors) {
    if (!graph.valid_node(start)) {
        throw InputError("start node out of range: " + std::to_string(start));
    }
    Configuration config;
    config.agent = start;
    config.coloring.assign(graph.node_count(), colors.initial());
    config.terminated = false;
    return config;
}

std::pair<ColorId, ColorMultiset> observe(const Graph& graph, const Configuration& config) {
    if (config.terminated) {
        throw UsageError("cannot observe a terminated configuration");
    }
    std::size_t num_colors = 0;
    for (ColorId c : config.coloring) {
        num_colors = std::max<std::size_t>(num_colors, c + 1);
    }
    ColorMultiset m(std::max<std::size_t>(num_colors, kMaxColors));
    for (NodeId u : graph.neighbors(config.agent)) {
        m.add(config.coloring[u]);
    }
    return {config.coloring[config.agent], m};
}

std::vector<NodeId> candidates(const Graph& graph, const Configuration& config, ColorId target) {
    std::vector<NodeId> out;
    for (NodeId u : graph.neighbors(config.agent)) {
        if (config.coloring[u] == target) {
            out.push_back(u);
        }
    }
    return out;
}

Expansion expand(const Graph& graph, const Configuration& config, const RuleFunction& rules) {
    if (config.terminated) {
        throw UsageError("cannot step a terminated configuration");
    }
    ColorMultiset m(rules.colors().size());
    for (NodeId u : graph.neighbors(config.agent)) {
        m.add(config.coloring[u]);
    }
    const ColorId current = config.coloring[config.agent];
    auto outcome = rules.evaluate(current, m);
    if (!outcome) {
        throw RuleUndefinedError(current, m, rules.colors());
    }

    Expansion exp;
    exp.outcome = *outcome;
    switch (outcome->directive.kind) {
        case MoveDirective::Kind::Stay:
            break;
        case MoveDirective::Kind::Stop:
            exp.termination = TerminationKind::StopDirective;
            break;
        case MoveDirective::Kind::ToColor:
            // Neighbor colors are read before the recoloring of the agent's
            // node (they cannot coincide: the graph has no self-loops).
            exp.move_candidates = candidates(graph, config, outcome->directive.color);
            if (exp.move_candidates.empty()) {
                exp.termination = TerminationKind::AbsentColor;
            }
            break;
    }
    return exp;
}

StepResult apply_expansion(const Graph& graph, const Configuration& config, const Expansion& exp,
                           std::optional<NodeId> chosen, std::uint64_t time) {
    StepResult result;
    result.record.time = time;
    result.record.node = config.agent;
    result.record.color_before = config.coloring[config.agent];
    result.record.color_after = exp.outcome.new_color;
    result.record.rule_id = exp.outcome.rule_id;
    result.record.directive = exp.outcome.directive;
    result.record.terminated_by = exp.termination;

    result.config = config;
    result.config.coloring[config.agent] = exp.outcome.new_color;
    if (exp.termination) {
        result.config.terminated = true;
    } else if (exp.needs_choice()) {
        if (!chosen) {
            throw AdversaryError("move requires a choice among " +
                                 std::to_string(exp.move_candidates.size()) + " candidates");
        }
        if (std::find(exp.move_candidates.begin(), exp.move_candidates.end(), *chosen) ==
            exp.move_candidates.end()) {
            throw AdversaryError("adversary chose node " + std::to_string(*chosen) +
                                 " which is not a candidate");
        }
        result.record.chosen = *chosen;
        result.config.agent = *chosen;
    }
    return result;
}

StepResult step(const Graph& graph, const Configuration& config, const RuleFunction& rules,
                const AdversaryFn& choose, std::uint64_t time) {
    Expansion exp = expand(graph, config, rules);
    std::optional<NodeId> chosen;
    if (exp.needs_choice()) {
        chosen = choose(exp.move_candidates);
    }
    return apply_expansion(graph, config, exp, chosen, time);
}

std::uint64_t default_step_cap(const Graph& graph) {
    return 100ULL * graph.node_count() * graph.edge_count() + 100ULL;
}

RunResult run(const Graph& graph, const RuleFunction& rules, NodeId start, const AdversaryFn& choose,
              std::uint64_t step_cap) {
    if (step_cap < 1) {
        throw InputError("step cap must be at least 1");
    }
    RunResult result;
    result.trace.graph = graph;
    result.trace.start = start;
    Configuration config = initial_configuration(graph, start, rules.colors());
    std::uint64_t t = 0;
    while (!config.terminated) {
        if (t >= step_cap) {
            result.cap_exceeded = true;
            break;
        }
        StepResult sr = step(graph, config, rules, choose, t);
        result.trace.steps.push_back(sr.record);
        config = std::move(sr.config);
        ++t;
    }
    result.trace.final_config = std::move(config);
    return result;
}

RunResult run(const Graph& graph, const RuleFunction& rules, NodeId start,
              const AdversaryFn& choose) {
    return run(graph, rules, start, choose, default_step_cap(graph));
}

Configuration walk_trace(
    const Trace& trace,
    const std::function<void(const Configuration&, const StepRecord*, std::uint64_t)>& visit) {
    Configuration config;
    config.agent = trace.start;
    config.terminated = false;
    config.coloring.assign(trace.graph.node_count(), 0);
    if (!trace.steps.empty()) {
        // Recover the initial color from the first record.
        config.coloring.assign(trace.graph.node_count(), trace.steps.front().color_before);
    } else {
        config.coloring = trace.final_config.coloring;
    }
    if (visit) {
        visit(config, nullptr, 0);
    }
    std::uint64_t t = 0;
    for (const auto& rec : trace.steps) {
        config.coloring[rec.node] = rec.color_after;
        if (rec.terminated_by) {
            config.terminated = true;
        } else if (rec.chosen) {
            config.agent = *rec.chosen;
        }
        ++t;
        if (visit) {
            visit(config, &rec, t);
        }
    }
    return config;
}

}  // namespace chromawalk
