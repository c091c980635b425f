#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromawalk/graph.hpp"

namespace chromawalk {

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Structurally valid but outside the required graph class (disconnected).
class ClassError : public Error {
  public:
    using Error::Error;
};

// Edge-list text format: header "n m", then m lines "u v", 0-indexed.
// Disconnected graphs are rejected unless allow_disconnected is set.
Graph parse_graph(std::string_view text, bool allow_disconnected = false);
std::string serialize_graph(const Graph& graph);

bool is_connected(const Graph& graph);

// Component partition of the graph, optionally with one node deleted. Each
// component is sorted; components are ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& graph,
                                                      std::optional<NodeId> removed = {});

std::uint32_t max_degree(const Graph& graph);

bool is_triangle_free(const Graph& graph);

// Criterion form: no node of degree >= 4 has three or more of its neighbors
// in one connected component of G - v.
bool is_phi_free(const Graph& graph);

// Brute-force search for a phi-shaped subgraph straight from its definition:
// distinct s, t, u with three node-disjoint s-t paths avoiding u that cover
// the subgraph's nodes except u, plus the edge {t, u}. Exponential; n <= 10.
// Cross-validates is_phi_free.
bool phi_shaped_oracle(const Graph& graph);

// Connected and no two simple cycles share an edge.
bool is_cactus(const Graph& graph);

struct GraphClassReport {
    bool connected = false;
    bool triangle_free = false;
    bool phi_free = false;
    bool cactus = false;
    std::uint32_t max_degree = 0;
};

GraphClassReport classify(const Graph& graph);

// Every labeled simple connected graph on nodes 0..n-1, exactly once, in
// increasing edge-bitmask order. 1 <= n <= 7.
void enumerate_connected(std::uint32_t n, const std::function<void(const Graph&)>& yield);
std::vector<Graph> enumerate_connected(std::uint32_t n);

// Seed-deterministic generators; every output is simple and connected.
Graph gen_random_connected(std::uint32_t n, double edge_prob, std::uint64_t seed);
Graph gen_cactus(std::uint32_t n, std::uint64_t seed);
Graph gen_max_deg3(std::uint32_t n, std::uint64_t seed);

}  // namespace chromawalk
