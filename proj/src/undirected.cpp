#include "pdbg/undirected.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdbg {

UndirectedGraph::UndirectedGraph(int n) : n(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj.resize(static_cast<std::size_t>(n) + 1);
}

void UndirectedGraph::add_edge(int u, int v) {
    if (u < 1 || u > n || v < 1 || v > n) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    edges.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u < 1 || u > n || v < 1 || v > n) return false;
    const auto& nb = adj[u];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

bool is_ham_cycle(const UndirectedGraph& g, const HamCycle& c) {
    if (static_cast<int>(c.order.size()) != g.n || g.n < 3) return false;
    std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v : c.order) {
        if (v < 1 || v > g.n || used[v]) return false;
        used[v] = 1;
    }
    for (std::size_t i = 0; i < c.order.size(); ++i) {
        if (!g.has_edge(c.order[i], c.order[(i + 1) % c.order.size()])) return false;
    }
    return true;
}

bool is_ham_path(const UndirectedGraph& g, const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != g.n || g.n < 1) return false;
    std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v : p) {
        if (v < 1 || v > g.n || used[v]) return false;
        used[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    return true;
}

}  // namespace pdbg
