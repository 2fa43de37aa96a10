#pragma once

#include <utility>
#include <vector>

namespace pdbg {

/// Simple undirected graph on vertices 1..n (no loops, no multi-edges).
struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, insertion order
    std::vector<std::vector<int>> adj;       // 1-based; adj[0] unused

    explicit UndirectedGraph(int n = 0);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
};

/// Hamiltonian cycle given as the vertex order around the cycle.
struct HamCycle {
    std::vector<int> order;
};

/// Checks that c visits every vertex exactly once and that consecutive
/// (including wrap-around) pairs are edges.
bool is_ham_cycle(const UndirectedGraph& g, const HamCycle& c);

/// Checks that p is a hamiltonian path of g.
bool is_ham_path(const UndirectedGraph& g, const std::vector<int>& p);

}  // namespace pdbg
