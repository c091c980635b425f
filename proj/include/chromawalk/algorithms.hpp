#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chromawalk/engine.hpp"
#include "chromawalk/graph.hpp"
#include "chromawalk/rules.hpp"

namespace chromawalk {

// Fixed color ids for the three published rule tables. Palette order follows
// the printed color sets; index 0 is always the initial color.
namespace gen6 {
inline constexpr ColorId kInit = 0;
inline constexpr ColorId kPath = 1;
inline constexpr ColorId kFin = 2;
inline constexpr ColorId kHead1 = 3;
inline constexpr ColorId kHead2 = 4;
inline constexpr ColorId kNeigh = 5;
}  // namespace gen6

namespace tf5 {
inline constexpr ColorId kInit = 0;
inline constexpr ColorId kPath = 1;
inline constexpr ColorId kNeigh = 2;
inline constexpr ColorId kFin = 3;
inline constexpr ColorId kHead = 4;
}  // namespace tf5

namespace pf5 {
inline constexpr ColorId kInit = 0;
inline constexpr ColorId kD0 = 1;
inline constexpr ColorId kD1 = 2;
inline constexpr ColorId kD2 = 3;
inline constexpr ColorId kFin = 4;

// d_{i mod 3}; the single place distance-index arithmetic lives.
ColorId distance_color(int i);
// Inverse: 0/1/2 for d_i, empty otherwise.
std::optional<int> distance_index(ColorId c);
}  // namespace pf5

// The six-color table for arbitrary graphs (rules 1-11, fin row undefined).
const RuleFunction& gen6_rules();
// The five-color table for triangle-free graphs (rules 1-13, fin undefined).
const RuleFunction& tf5_rules();
// The five-color table for phi-free graphs (rules 1-7 with index arithmetic
// modulo 3, fin undefined).
const RuleFunction& pf5_rules();

// Lookup by canonical name "gen6" | "tf5" | "pf5"; null if unknown.
const RuleFunction* find_rules(std::string_view name);

// f(M) = min{ i in {0,1,2} : d_{i-1} in M and d_{i+1} not in M }. Defined
// when M holds at least one distance color but not all three; throws
// UsageError otherwise.
int f_index(const ColorMultiset& m);

// Digraph induced on a pf5 coloring: arc (u,v) iff {u,v} is an edge, u bears
// d_i and v bears d_{i+1 mod 3}.
struct DistanceDigraph {
    std::vector<std::pair<NodeId, NodeId>> arcs;  // sorted

    bool operator==(const DistanceDigraph& other) const = default;
};

DistanceDigraph distance_digraph(const Graph& graph, const Configuration& config);

// Maintained state of the semi-DFS: the path P, the finished set F, and the
// while-loop iteration counter. Invariant: nodes u_i, u_j of P are adjacent
// only when |i-j| = 1.
struct SemiDfsState {
    std::vector<NodeId> path;
    std::vector<std::uint8_t> finished;  // indexed by node
    std::uint32_t iterations = 0;
};

// U(P, F) = N(u_k) \ (F ∪ {u_1..u_k} ∪ N(u_1) ∪ ... ∪ N(u_{k-1})), sorted.
// Throws UsageError when the path is empty.
std::vector<NodeId> u_set(const Graph& graph, const SemiDfsState& state);

enum class SemiDfsPolicy { Lowest, Highest, Random };

struct SemiDfsResult {
    std::vector<NodeId> finished_order;
    std::uint32_t iterations = 0;
};

using SemiDfsObserver = std::function<void(const SemiDfsState&)>;

// Reference oracle for the exploration algorithms. The observer, when given,
// sees the state after every loop iteration.
SemiDfsResult semi_dfs(const Graph& graph, NodeId start, SemiDfsPolicy policy,
                       std::uint64_t seed = 0, const SemiDfsObserver& observer = {});

}  // namespace chromawalk
