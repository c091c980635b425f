#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chromawalk/colors.hpp"

namespace chromawalk {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph on nodes 0..n-1 with sorted adjacency lists.
// Simplicity (no self-loops, no parallel edges) is enforced on construction;
// connectivity is checked by the I/O layer, not here, so that component
// utilities can hold node-deleted graphs.
class Graph {
  public:
    Graph() = default;
    Graph(std::uint32_t n, const std::vector<Edge>& edges);

    std::uint32_t node_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const std::vector<NodeId>& neighbors(NodeId v) const;
    std::uint32_t degree(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;
    bool valid_node(NodeId v) const { return v < n_; }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

  private:
    std::uint32_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<NodeId>> adj_;
};

}  // namespace chromawalk
