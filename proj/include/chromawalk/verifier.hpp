#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromawalk/engine.hpp"
#include "chromawalk/graph.hpp"
#include "chromawalk/rules.hpp"

namespace chromawalk {

// strict: Definition-1 verbatim — every maximal execution terminates at the
//   start having visited every node; tracks the visited set per branch, no
//   cross-branch memoization.
// surrogate: every maximal execution terminates at the start with all nodes
//   colored fin. History-free, hence sound to memoize per configuration.
enum class CheckMode { Strict, Surrogate };

enum class FailReason : std::uint8_t {
    Nontermination,
    BadTerminal,
    UndefinedRule,
    CapExceeded,
};

std::string_view to_string(FailReason r);

struct CheckStats {
    std::uint64_t branches = 0;        // maximal executions examined (incl. memo hits)
    std::uint64_t configurations = 0;  // distinct configurations encountered
    std::uint64_t max_depth = 0;
};

struct Verdict {
    bool pass = false;
    std::optional<FailReason> reason;
    std::string detail;
    std::optional<Trace> counterexample;
    // For nontermination: index i such that the counterexample's final
    // configuration equals its configuration after i steps.
    std::optional<std::size_t> lasso_index;
    CheckStats stats;
};

struct MonitorViolation {
    std::string lemma;
    std::uint64_t step_index = 0;
    std::string explanation;
    Configuration config;
    bool asserted = true;  // false when outside the monitor's hypothesis
};

struct MonitorContext {
    const Graph& graph;
    NodeId start;
    const Configuration& config;
    const StepRecord* last_step;  // null for the initial configuration
    std::uint64_t time;
};

// Per-configuration invariant checks lifted from the correctness arguments.
// Monitors never fail a verdict; violations are collected and, when the
// input graph satisfies the monitor's hypothesis, asserted by sweeps.
class Monitor {
  public:
    virtual ~Monitor() = default;
    virtual std::string_view tag() const = 0;
    virtual bool applies_to(const RuleFunction& rules) const = 0;
    virtual bool in_hypothesis(const Graph& graph) const { return true; }
    virtual void on_config(const MonitorContext& ctx, std::vector<MonitorViolation>& out) const = 0;
};

// pf5: the distance digraph stays acyclic and every distance-colored node is
// reachable from the start. Holds on every graph.
class Pf5DagMonitor : public Monitor {
  public:
    std::string_view tag() const override { return "pf5-dag"; }
    bool applies_to(const RuleFunction& rules) const override;
    void on_config(const MonitorContext& ctx, std::vector<MonitorViolation>& out) const override;
};

// pf5: the subgraph induced on the non-fin nodes stays connected. Hypothesis:
// phi-free input.
class Pf5ConnectivityMonitor : public Monitor {
  public:
    std::string_view tag() const override { return "pf5-connectivity"; }
    bool applies_to(const RuleFunction& rules) const override;
    bool in_hypothesis(const Graph& graph) const override;
    void on_config(const MonitorContext& ctx, std::vector<MonitorViolation>& out) const override;
};

// pf5: rule 1 fires only at nodes of degree exactly 3. Hypothesis: phi-free.
class Pf5Rule1DegreeMonitor : public Monitor {
  public:
    std::string_view tag() const override { return "pf5-rule1-degree"; }
    bool applies_to(const RuleFunction& rules) const override;
    bool in_hypothesis(const Graph& graph) const override;
    void on_config(const MonitorContext& ctx, std::vector<MonitorViolation>& out) const override;
};

// gen6 checkpoints: whenever the agent sits on the unique head1 node and no
// node is colored head2 or neigh, the coloring must form a return path from
// the start (all other nodes init or fin); terminated configurations must be
// all-fin at the start.
class Gen6RegularityMonitor : public Monitor {
  public:
    std::string_view tag() const override { return "gen6-regularity"; }
    bool applies_to(const RuleFunction& rules) const override;
    void on_config(const MonitorContext& ctx, std::vector<MonitorViolation>& out) const override;
};

// Standalone regular-configuration test backing the gen6 monitor.
struct RegularConfigCheck {
    bool applicable = false;  // terminated, or the checkpoint predicate matched
    bool regular = false;
    std::vector<NodeId> return_path;  // found path when regular and not final
    std::string explanation;
};

RegularConfigCheck check_gen6_regularity(const Graph& graph, NodeId start,
                                         const Configuration& config);

// The applicable monitor set for an algorithm (static instances).
std::vector<const Monitor*> standard_monitors(const RuleFunction& rules);

struct CheckOptions {
    CheckMode mode = CheckMode::Surrogate;
    bool memoize = true;  // surrogate only
    std::vector<const Monitor*> monitors;
    bool collect_colors = false;
    std::size_t max_violations = 64;
};

struct CheckReport {
    Verdict verdict;
    std::vector<MonitorViolation> violations;
    std::uint32_t colors_seen = 0;  // bitmask over color ids
};

// Explores the adversarial branching of every execution from `start`,
// depth-first with loop detection: a configuration recurring on the current
// branch is nontermination (the adversary repeats its choices forever).
CheckReport check_all_executions(const Graph& graph, const RuleFunction& rules, NodeId start,
                                 const CheckOptions& options = {});

struct FuzzOptions {
    std::vector<std::uint64_t> seeds = {0};
    std::uint64_t step_cap = 0;  // 0: default_step_cap(graph)
    std::vector<const Monitor*> monitors;
    bool collect_colors = false;
    std::size_t max_violations = 64;
};

// Seeded random-adversary runs; PASS iff every run terminates at the start
// with all nodes fin within the cap.
CheckReport fuzz(const Graph& graph, const RuleFunction& rules, NodeId start,
                 const FuzzOptions& options);

// ---- Sweeps over graph families ----

struct FamilyGraph {
    Graph graph;
    std::string key;
};

struct Family {
    std::string description;
    std::vector<FamilyGraph> graphs;
};

// All connected labeled graphs with 1 <= n <= max_n.
Family enumerate_family(std::uint32_t max_n);
// `count` generated graphs of kind "cactus" | "maxdeg3" | "random" with sizes
// cycling 2..max_n, seeded from seed_base.
Family generator_family(std::string_view kind, std::uint32_t count, std::uint32_t max_n,
                        std::uint64_t seed_base, double edge_prob = 0.3);
Family single_graph_family(Graph graph, std::string key = "graph");

enum class ClassFilter { Auto, All, TriangleFree, PhiFree };

struct SweepOptions {
    CheckMode mode = CheckMode::Surrogate;
    bool use_fuzz = false;
    std::vector<std::uint64_t> fuzz_seeds = {0};
    std::uint64_t step_cap = 0;
    bool monitors_enabled = true;
    bool memoize = true;
    bool collect_colors = false;
    std::optional<NodeId> only_start;
    // Auto filters the family to the algorithm's class hypothesis (gen6: all,
    // tf5: triangle-free, pf5: phi-free). All keeps everything and runs
    // out-of-hypothesis instances in record-only mode.
    ClassFilter class_filter = ClassFilter::Auto;
    unsigned threads = 0;  // 0: CHROMA_WALK_THREADS or hardware concurrency
    std::size_t max_failures_kept = 16;
    std::size_t max_violations_kept = 64;
};

struct InstanceResult {
    std::size_t graph_index = 0;
    std::string graph_key;
    NodeId start = 0;
    bool asserted = true;
    Verdict verdict;
};

struct SweepReport {
    std::string algorithm;
    std::string family;
    std::string mode;
    std::uint64_t total = 0;      // instances checked
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t record_only = 0;  // instances outside the hypothesis
    std::uint64_t skipped_graphs = 0;
    std::uint64_t asserted_failures = 0;
    std::vector<InstanceResult> failures;  // capped
    std::uint64_t violations_total = 0;
    std::uint64_t asserted_violations = 0;
    std::vector<MonitorViolation> violations;  // capped
    CheckStats stats;
    std::uint32_t colors_seen = 0;
    double elapsed_seconds = 0.0;

    bool clean() const { return asserted_failures == 0 && asserted_violations == 0; }
};

// Runs check_all_executions (or fuzz) for every (graph, start) pair of the
// family, distributing instances over worker threads. Deterministic given
// seeds; aggregation is ordered by (graph, start).
SweepReport sweep(const Family& family, const RuleFunction& rules, const SweepOptions& options);

// Worker count bound: explicit > CHROMA_WALK_THREADS > hardware concurrency.
unsigned worker_count(unsigned requested = 0);

}  // namespace chromawalk
