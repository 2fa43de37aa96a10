#include "pdbg/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace pdbg::oracle {

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& seq) {
    std::vector<int> best = seq;
    std::vector<int> cand(seq.size());
    for (std::size_t r = 1; r < seq.size(); ++r) {
        for (std::size_t i = 0; i < seq.size(); ++i) cand[i] = seq[(i + r) % seq.size()];
        if (cand < best) best = cand;
    }
    return best;
}

struct Enumerator {
    const PairedDbGraph& g;
    long d;
    std::size_t lmax;
    std::size_t max_count;

    std::vector<SymbolId> xc;  // per vertex (k>=1) or per edge (k=0)
    std::vector<SymbolId> yc;
    std::vector<CycleWitness> found;
    std::set<std::vector<int>> seen;  // canonical index sequences

    bool full() const { return found.size() >= max_count; }

    void record(const std::vector<int>& steps, bool per_edge) {
        CycleWitness w;
        w.shift = d;
        if (per_edge) {
            for (int e : steps) {
                w.vertices.push_back(g.vertex_id(g.edge(e).from));
                w.edge_labels.push_back(*g.edge(e).label);
            }
        } else {
            for (int v : steps) w.vertices.push_back(g.vertex_id(v));
        }
        // The one and only acceptance check: spell it and match.
        if (!matches_with_shift(spell(g, w), d)) return;
        std::vector<int> canon = canonical_rotation(steps);
        if (!seen.insert(canon).second) return;
        // Report the canonical rotation itself so output is rotation-stable.
        std::size_t shift_by = 0;
        for (std::size_t r = 0; r < steps.size(); ++r) {
            bool eq = true;
            for (std::size_t i = 0; i < steps.size() && eq; ++i) {
                eq = steps[(i + r) % steps.size()] == canon[i];
            }
            if (eq) { shift_by = r; break; }
        }
        found.push_back(rotate(w, shift_by));
    }

    // k >= 1: walks over vertices, restricted to indices >= start so each
    // cyclic walk is enumerated from its minimal vertex.
    void dfs_vertices(int start, std::vector<int>& path) {
        if (full()) return;
        int last = path.back();
        if (g.find_edge(last, start)) record(path, /*per_edge=*/false);
        if (full() || path.size() >= lmax) return;
        for (int e : g.out_edges(last)) {
            int v = g.edge(e).to;
            if (v < start) continue;
            const long j = static_cast<long>(path.size()) + 1;
            if (d == 0) {
                if (xc[v] != yc[v]) continue;
            } else if (j - d >= 1) {
                if (yc[path[static_cast<std::size_t>(j - d - 1)]] != xc[v]) continue;
            }
            path.push_back(v);
            dfs_vertices(start, path);
            path.pop_back();
            if (full()) return;
        }
    }

    // k = 0: walks over explicit edges (all loops on the single vertex),
    // restricted to edge indices >= start.
    void dfs_edges(int start, std::vector<int>& steps) {
        if (full()) return;
        if (!steps.empty()) record(steps, /*per_edge=*/true);
        if (full() || steps.size() >= lmax) return;
        for (int e = start; e < g.edge_count(); ++e) {
            if (steps.empty() && e != start) break;  // first step fixes the minimum
            const long j = static_cast<long>(steps.size()) + 1;
            if (d == 0) {
                if (xc[e] != yc[e]) continue;
            } else if (j - d >= 1) {
                if (yc[steps[static_cast<std::size_t>(j - d - 1)]] != xc[e]) continue;
            }
            steps.push_back(e);
            dfs_edges(start, steps);
            steps.pop_back();
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<CycleWitness> enumerate_sound_cycles(const PairedDbGraph& g, long d,
                                                 std::size_t lmax, std::size_t max_count) {
    if (lmax < 1) throw std::invalid_argument("lmax must be at least 1");
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    {
        ValidationReport r = g.validate();
        if (!r.ok()) throw std::invalid_argument("invalid graph: " + r.violations.front());
    }
    Enumerator en{g, d, lmax, max_count, {}, {}, {}, {}};
    if (g.order() >= 1) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            en.xc.push_back(g.vertex_label(v).first.front());
            en.yc.push_back(g.vertex_label(v).second.front());
        }
        std::vector<int> path;
        for (int s = 0; s < g.vertex_count() && !en.full(); ++s) {
            if (en.d == 0 && en.xc[s] != en.yc[s]) continue;
            path.assign(1, s);
            en.dfs_vertices(s, path);
        }
    } else {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Bilabel& l = *g.edge(e).label;
            en.xc.push_back(l.first[0]);
            en.yc.push_back(l.second[0]);
        }
        std::vector<int> steps;
        for (int s = 0; s < g.edge_count() && !en.full(); ++s) {
            steps.clear();
            en.dfs_edges(s, steps);
        }
    }
    return std::move(en.found);
}

std::optional<long> brute_cover_count(const poly::CharDigraph& h, long max_walks,
                                      long max_len) {
    if (max_walks < 1 || max_len < 1) throw std::invalid_argument("bounds must be >= 1");
    const int m = static_cast<int>(h.arcs.size());
    if (m == 0) return 0;
    if (m > 20) throw std::invalid_argument("brute_cover_count handles at most 20 arcs");
    const int n = h.alphabet.size();
    const std::uint32_t full = (m == 32) ? 0xffffffffu : ((1u << m) - 1);

    std::vector<std::vector<int>> arcs_from(static_cast<std::size_t>(n));
    for (int a = 0; a < m; ++a) arcs_from[h.arcs[a].first].push_back(a);

    // Arc subsets traversable by a single closed walk of length <= max_len.
    std::set<std::uint32_t> coverable;
    for (int start = 0; start < n; ++start) {
        if (arcs_from[start].empty()) continue;
        std::vector<char> visited(static_cast<std::size_t>(n) << m, 0);
        struct Item { int cur; std::uint32_t mask; long len; };
        std::queue<Item> queue;
        queue.push({start, 0, 0});
        visited[(static_cast<std::size_t>(start) << m)] = 1;
        while (!queue.empty()) {
            Item it = queue.front();
            queue.pop();
            if (it.len >= max_len) continue;
            for (int a : arcs_from[it.cur]) {
                int next = h.arcs[a].second;
                std::uint32_t mask = it.mask | (1u << a);
                std::size_t key = (static_cast<std::size_t>(next) << m) | mask;
                if (next == start) coverable.insert(mask);
                if (!visited[key]) {
                    visited[key] = 1;
                    queue.push({next, mask, it.len + 1});
                }
            }
        }
    }
    if (coverable.empty()) return std::nullopt;

    // Exact minimum cover over the reachable mask space.
    std::vector<int> dist(1u << m, -1);
    dist[0] = 0;
    std::queue<std::uint32_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        std::uint32_t cur = queue.front();
        queue.pop();
        if (cur == full) return dist[full] <= max_walks ? std::optional<long>(dist[full])
                                                        : std::nullopt;
        if (dist[cur] >= max_walks) continue;
        for (std::uint32_t c : coverable) {
            std::uint32_t next = cur | c;
            if (dist[next] < 0) {
                dist[next] = dist[cur] + 1;
                queue.push(next);
            }
        }
    }
    return std::nullopt;
}

namespace {

bool extend_cycle(const UndirectedGraph& g, std::vector<int>& order, std::vector<char>& used) {
    if (static_cast<int>(order.size()) == g.n) {
        return g.has_edge(order.back(), order.front());
    }
    std::vector<int> nb = g.adj[order.back()];
    std::sort(nb.begin(), nb.end());
    for (int v : nb) {
        if (used[v]) continue;
        used[v] = 1;
        order.push_back(v);
        if (extend_cycle(g, order, used)) return true;
        order.pop_back();
        used[v] = 0;
    }
    return false;
}

bool extend_path(const UndirectedGraph& g, std::vector<int>& path, std::vector<char>& used) {
    if (static_cast<int>(path.size()) == g.n) return true;
    std::vector<int> nb = g.adj[path.back()];
    std::sort(nb.begin(), nb.end());
    for (int v : nb) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        if (extend_path(g, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

}  // namespace

std::optional<HamCycle> find_ham_cycle(const UndirectedGraph& g) {
    if (g.n < 3) return std::nullopt;
    std::vector<int> order{1};
    std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
    used[1] = 1;
    if (extend_cycle(g, order, used)) return HamCycle{order};
    return std::nullopt;
}

std::optional<std::vector<int>> find_ham_path(const UndirectedGraph& g) {
    if (g.n < 1) return std::nullopt;
    if (g.n == 1) return std::vector<int>{1};
    for (int start = 1; start <= g.n; ++start) {
        std::vector<int> path{start};
        std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
        used[start] = 1;
        if (extend_path(g, path, used)) return path;
    }
    return std::nullopt;
}

}  // namespace pdbg::oracle
