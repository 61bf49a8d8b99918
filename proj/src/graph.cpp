#include "neighborly/graph.hpp"

namespace neighborly {

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const Subset& a : adj) total += static_cast<std::size_t>(card(a));
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n; ++u)
        for (int v : to_vertices(adj[u - 1]))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph graph_square(const Graph& g) {
    Graph sq = g;
    for (int u = 1; u <= g.n; ++u) {
        Subset dist2 = 0;
        for (int w : to_vertices(g.adj[u - 1])) dist2 |= g.adj[w - 1];
        dist2 &= ~single(u);
        dist2 &= ~g.adj[u - 1];
        for (int v : to_vertices(dist2)) sq.add_edge(u, v);
    }
    return sq;
}

Subset closed_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    return g.adj[v - 1] | single(v);
}

DominationSummary minimal_dominating_sets(const Graph& g, std::size_t cap) {
    std::vector<Subset> hoods;
    hoods.reserve(static_cast<std::size_t>(g.n));
    for (int v = 1; v <= g.n; ++v) hoods.push_back(closed_neighborhood(g, v));
    DominationSummary summary;
    summary.minimal_sets = minimal_transversals(hoods, cap);
    summary.gamma = g.n;
    summary.gamma_prime = 0;
    for (Subset s : summary.minimal_sets) {
        summary.gamma = std::min(summary.gamma, card(s));
        summary.gamma_prime = std::max(summary.gamma_prime, card(s));
    }
    return summary;
}

}  // namespace neighborly
