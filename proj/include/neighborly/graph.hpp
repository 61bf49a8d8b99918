#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "neighborly/subset.hpp"
#include "neighborly/transversal.hpp"

namespace neighborly {

// Finite simple graph on vertices 1..n, adjacency kept as bitsets.
struct Graph {
    int n = 0;
    std::vector<Subset> adj;  // adj[v-1], never contains v itself

    explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_), 0) {
        if (n_ < 1 || n_ > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj[u - 1] |= single(v);
        adj[v - 1] |= single(u);
    }

    bool has_edge(int u, int v) const { return contains(adj[u - 1], v); }

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const {
        if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
    }
};

struct DominationSummary {
    int gamma = 0;        // minimum size of a dominating set
    int gamma_prime = 0;  // maximum size of a minimal dominating set
    std::vector<Subset> minimal_sets;
};

Graph path_graph(int n);

// adds an edge for every pair at distance exactly 2
Graph graph_square(const Graph& g);

Subset closed_neighborhood(const Graph& g, int v);

DominationSummary minimal_dominating_sets(const Graph& g,
                                          std::size_t cap = kDefaultTransversalCap);

}  // namespace neighborly
