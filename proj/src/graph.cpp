#include "chromawalk/graph.hpp"

#include <algorithm>

namespace chromawalk {

Graph::Graph(std::uint32_t n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        }
        if (u == v) {
            throw InputError("self-loop at node " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw InputError("parallel edge at node " + std::to_string(v));
        }
    }
    m_ = edges.size();
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    if (v >= n_) {
        throw InputError("node id out of range: " + std::to_string(v));
    }
    return adj_[v];
}

std::uint32_t Graph::degree(NodeId v) const {
    return static_cast<std::uint32_t>(neighbors(v).size());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) {
        return false;
    }
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

}  // namespace chromawalk
