#include "pdbg/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <span>
#include <string_view>

#include "pdbg/scc.hpp"

namespace pdbg::solver {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void append_packed(std::string& s, SymbolId id) {
    s.push_back(static_cast<char>(id & 0xff));
    s.push_back(static_cast<char>((id >> 8) & 0xff));
}

SymbolId packed_front(std::string_view s) {
    return static_cast<SymbolId>(static_cast<unsigned char>(s[0]) |
                                 (static_cast<unsigned char>(s[1]) << 8));
}

struct Emission {
    // Per-vertex leading characters of the bilabel components (k >= 1), or
    // per-edge characters (k = 0).
    bool per_edge = false;
    std::vector<SymbolId> x;
    std::vector<SymbolId> y;
};

Emission make_emission(const PairedDbGraph& g) {
    Emission em;
    if (g.order() >= 1) {
        em.per_edge = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            em.x.push_back(g.vertex_label(v).first.front());
            em.y.push_back(g.vertex_label(v).second.front());
        }
    } else {
        em.per_edge = true;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Bilabel& l = *g.edge(e).label;
            em.x.push_back(l.first[0]);
            em.y.push_back(l.second[0]);
        }
    }
    return em;
}

struct Child {
    std::uint32_t parent;
    std::uint32_t sym;
    std::uint32_t vertex;
    bool operator<(const Child& o) const {
        if (parent != o.parent) return parent < o.parent;
        if (sym != o.sym) return sym < o.sym;
        return vertex < o.vertex;
    }
    bool operator==(const Child& o) const {
        return parent == o.parent && sym == o.sym && vertex == o.vertex;
    }
};

void compute_scc(StateGraph& sg) {
    sg.scc = detail::tarjan_scc(sg.node_count(), [&](std::uint32_t v) {
        return std::span<const std::uint32_t>(sg.arc_target.data() + sg.arc_offset[v],
                                              sg.arc_offset[v + 1] - sg.arc_offset[v]);
    });
}

}  // namespace

std::string_view StateGraph::window_bytes(std::uint32_t wid) const {
    const std::size_t stride = static_cast<std::size_t>(window_len) * 2;
    return std::string_view(window_data).substr(wid * stride, stride);
}

SymbolString StateGraph::window_symbols(std::size_t node) const {
    std::string_view w = window_bytes(node_window[node]);
    SymbolString out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
        out.push_back(static_cast<SymbolId>(static_cast<unsigned char>(w[i]) |
                                            (static_cast<unsigned char>(w[i + 1]) << 8)));
    }
    return out;
}

std::optional<std::size_t> StateGraph::find_node(int vertex, const SymbolString& window) const {
    for (std::size_t i = 0; i < node_count(); ++i) {
        if (node_vertex[i] != vertex) continue;
        if (window_symbols(i) == window) return i;
    }
    return std::nullopt;
}

StateGraph build_state_graph(const PairedDbGraph& g, long d, const SolverOptions& opts) {
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    if (g.alphabet().size() > 0xffff) {
        throw ResourceLimitError("alphabet too large for packed state windows");
    }
    {
        ValidationReport r = g.validate();
        if (!r.ok()) throw std::invalid_argument("invalid graph: " + r.violations.front());
    }

    const Emission em = make_emission(g);
    StateGraph sg;
    sg.shift = d;
    sg.window_len = static_cast<int>(d);

    std::size_t materialized = 0;
    auto check_cap = [&](std::size_t add) {
        materialized += add;
        if (materialized > opts.max_states) {
            throw ResourceLimitError("state cap exceeded (" + std::to_string(opts.max_states) +
                                     " states)");
        }
    };

    if (d == 0) {
        // Window is empty; the constraint degenerates to per-step equality
        // of the emitted pair.
        check_cap(static_cast<std::size_t>(g.vertex_count()));
        sg.node_vertex.resize(static_cast<std::size_t>(g.vertex_count()));
        sg.node_window.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v = 0; v < g.vertex_count(); ++v) sg.node_vertex[v] = v;
        sg.arc_offset.assign(sg.node_count() + 1, 0);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int e : g.out_edges(u)) {
                int t = g.edge(e).to;
                SymbolId xc = em.per_edge ? em.x[e] : em.x[t];
                SymbolId yc = em.per_edge ? em.y[e] : em.y[t];
                if (xc != yc) continue;
                sg.arc_target.push_back(static_cast<std::uint32_t>(t));
                sg.arc_edge.push_back(static_cast<std::uint32_t>(e));
            }
            sg.arc_offset[u + 1] = static_cast<std::uint32_t>(sg.arc_target.size());
        }
        compute_scc(sg);
        return sg;
    }

    // Seed generation. A level-j entry is (window trie node, vertex) for a
    // j-step emission history; level d holds exactly the realizable seeds,
    // and the seed set is closed under constrained arcs. Everything is
    // sort-deduplicated, so node ordering is canonical.
    std::vector<std::uint64_t> trie;  // (parent << 16) | symbol; index = trie node
    trie.push_back(0);                // node 0: empty window
    std::vector<std::pair<std::uint32_t, std::uint32_t>> level;  // (tnode, vertex)
    std::vector<Child> children;

    const std::size_t child_guard =
        std::max<std::size_t>(std::size_t{1} << 26, 6 * opts.max_states);
    auto run_round = [&](bool emit_start_vertex) {
        children.clear();
        for (const auto& [tnode, u] : level) {
            if (emit_start_vertex) {
                children.push_back({tnode, static_cast<std::uint32_t>(em.y[u]), u});
            } else {
                for (int e : g.out_edges(static_cast<int>(u))) {
                    int t = g.edge(e).to;
                    SymbolId yc = em.per_edge ? em.y[e] : em.y[t];
                    children.push_back({tnode, static_cast<std::uint32_t>(yc),
                                        static_cast<std::uint32_t>(t)});
                    if (children.size() > child_guard) {
                        throw ResourceLimitError("state frontier exceeded the cap");
                    }
                }
            }
        }
        std::sort(children.begin(), children.end());
        children.erase(std::unique(children.begin(), children.end()), children.end());
        check_cap(children.size());
        level.clear();
        std::uint32_t cur_parent = kNone;
        std::uint32_t cur_sym = kNone;
        std::uint32_t tnode = 0;
        for (const Child& c : children) {
            if (c.parent != cur_parent || c.sym != cur_sym) {
                cur_parent = c.parent;
                cur_sym = c.sym;
                tnode = static_cast<std::uint32_t>(trie.size());
                trie.push_back((static_cast<std::uint64_t>(c.parent) << 16) |
                               (c.sym & 0xffff));
            }
            level.emplace_back(tnode, c.vertex);
        }
    };

    check_cap(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        level.emplace_back(0u, static_cast<std::uint32_t>(v));
    }
    if (!em.per_edge) {
        // A d-vertex walk emits once at its start and once per edge step.
        run_round(/*emit_start_vertex=*/true);
        for (long j = 1; j < d; ++j) run_round(false);
    } else {
        // Order 0: one emission per traversed edge.
        for (long j = 0; j < d; ++j) run_round(false);
    }
    children.clear();
    children.shrink_to_fit();

    // Materialize nodes (sorted by (tnode, vertex)) and window contents.
    const std::size_t n = level.size();
    const std::size_t stride = static_cast<std::size_t>(d) * 2;
    sg.node_vertex.reserve(n);
    sg.node_window.reserve(n);
    std::uint32_t wid = kNone;
    std::uint32_t prev_tnode = kNone;
    for (const auto& [tnode, v] : level) {
        if (tnode != prev_tnode) {
            prev_tnode = tnode;
            ++wid;
            // Walk the parent chain: newest symbol first, so fill backwards.
            sg.window_data.resize(sg.window_data.size() + stride);
            char* out = sg.window_data.data() + sg.window_data.size();
            std::uint64_t cur = tnode;
            for (long j = 0; j < d; ++j) {
                std::uint64_t packed = trie[cur];
                SymbolId sym = static_cast<SymbolId>(packed & 0xffff);
                out -= 2;
                out[0] = static_cast<char>(sym & 0xff);
                out[1] = static_cast<char>((sym >> 8) & 0xff);
                cur = packed >> 16;
            }
        }
        sg.node_vertex.push_back(static_cast<int>(v));
        sg.node_window.push_back(wid);
    }
    level.clear();
    level.shrink_to_fit();
    trie.clear();
    trie.shrink_to_fit();

    const std::uint32_t window_count = (n == 0) ? 0 : wid + 1;

    // Window ids sorted by content, for arc-target resolution.
    std::vector<std::uint32_t> by_content(window_count);
    for (std::uint32_t i = 0; i < window_count; ++i) by_content[i] = i;
    std::sort(by_content.begin(), by_content.end(), [&](std::uint32_t a, std::uint32_t b) {
        return sg.window_bytes(a) < sg.window_bytes(b);
    });
    auto find_window = [&](std::string_view w) -> std::uint32_t {
        auto it = std::lower_bound(by_content.begin(), by_content.end(), w,
                                   [&](std::uint32_t a, std::string_view key) {
                                       return sg.window_bytes(a) < key;
                                   });
        if (it == by_content.end() || sg.window_bytes(*it) != w) return kNone;
        return *it;
    };
    // Nodes are sorted by (window id, vertex) by construction.
    auto find_state = [&](std::uint32_t w, int v) -> std::uint32_t {
        auto begin = std::lower_bound(
            sg.node_window.begin(), sg.node_window.end(), w);
        for (std::size_t i = std::distance(sg.node_window.begin(), begin);
             i < n && sg.node_window[i] == w; ++i) {
            if (sg.node_vertex[i] == v) return static_cast<std::uint32_t>(i);
            if (sg.node_vertex[i] > v) break;
        }
        return kNone;
    };

    sg.arc_offset.assign(n + 1, 0);
    std::string w2;
    for (std::size_t i = 0; i < n; ++i) {
        int u = sg.node_vertex[i];
        std::string_view w = sg.window_bytes(sg.node_window[i]);
        for (int e : g.out_edges(u)) {
            int t = g.edge(e).to;
            SymbolId xc = em.per_edge ? em.x[e] : em.x[t];
            SymbolId yc = em.per_edge ? em.y[e] : em.y[t];
            if (packed_front(w) != xc) continue;
            w2.assign(w.substr(2));
            append_packed(w2, yc);
            std::uint32_t wid2 = find_window(w2);
            std::uint32_t target = wid2 == kNone ? kNone : find_state(wid2, t);
            if (target == kNone) {
                throw std::logic_error("state graph arc target is not a seed");
            }
            sg.arc_target.push_back(target);
            sg.arc_edge.push_back(static_cast<std::uint32_t>(e));
        }
        sg.arc_offset[i + 1] = static_cast<std::uint32_t>(sg.arc_target.size());
    }

    compute_scc(sg);
    return sg;
}

namespace {

CycleWitness project_witness(const PairedDbGraph& g, const StateGraph& sg,
                             const std::vector<std::uint32_t>& nodes,
                             const std::vector<std::uint32_t>& arcs) {
    CycleWitness w;
    w.shift = sg.shift;
    w.vertices.reserve(nodes.size());
    for (std::uint32_t node : nodes) {
        w.vertices.push_back(g.vertex_id(sg.node_vertex[node]));
    }
    if (g.order() == 0) {
        w.edge_labels.reserve(arcs.size());
        for (std::uint32_t a : arcs) {
            w.edge_labels.push_back(*g.edge(static_cast<int>(sg.arc_edge[a])).label);
        }
    }
    return w;
}

// Shortest arc path from `from` to `to` inside component `comp` (BFS; ties
// resolved by arc order). Returns false if unreachable.
bool bfs_path_in_component(const StateGraph& sg, std::int32_t comp, std::uint32_t from,
                           std::uint32_t to, std::vector<std::uint32_t>& out_arcs) {
    out_arcs.clear();
    if (from == to) return true;
    std::vector<std::uint32_t> parent_arc(sg.node_count(), kNone);
    std::vector<std::uint32_t> parent_node(sg.node_count(), kNone);
    std::queue<std::uint32_t> queue;
    queue.push(from);
    std::vector<char> visited(sg.node_count(), 0);
    visited[from] = 1;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop();
        for (std::uint32_t a = sg.arc_offset[u]; a < sg.arc_offset[u + 1]; ++a) {
            std::uint32_t v = sg.arc_target[a];
            if (sg.scc[v] != comp || visited[v]) continue;
            visited[v] = 1;
            parent_arc[v] = a;
            parent_node[v] = u;
            if (v == to) {
                std::vector<std::uint32_t> rev;
                for (std::uint32_t cur = v; cur != from; cur = parent_node[cur]) {
                    rev.push_back(parent_arc[cur]);
                }
                out_arcs.assign(rev.rbegin(), rev.rend());
                return true;
            }
            queue.push(v);
        }
    }
    return false;
}

std::uint32_t arc_source(const StateGraph& sg, std::uint32_t arc) {
    auto it = std::upper_bound(sg.arc_offset.begin(), sg.arc_offset.end(), arc);
    return static_cast<std::uint32_t>(std::distance(sg.arc_offset.begin(), it) - 1);
}

}  // namespace

std::optional<CycleWitness> exists_sound_cycle(const PairedDbGraph& g, long d,
                                               const SolverOptions& opts) {
    StateGraph sg = build_state_graph(g, d, opts);
    const std::size_t n = sg.node_count();
    if (n == 0) return std::nullopt;

    std::int32_t comp_count = 1 + *std::max_element(sg.scc.begin(), sg.scc.end());
    std::vector<char> cyclic(comp_count, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t a = sg.arc_offset[u]; a < sg.arc_offset[u + 1]; ++a) {
            if (sg.scc[sg.arc_target[a]] == sg.scc[u]) cyclic[sg.scc[u]] = 1;
        }
    }
    std::uint32_t anchor = kNone;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (cyclic[sg.scc[i]]) { anchor = i; break; }
    }
    if (anchor == kNone) return std::nullopt;

    // Shortest cycle through the anchor: one arc out, then BFS back.
    const std::int32_t comp = sg.scc[anchor];
    std::vector<std::uint32_t> best_arcs;
    for (std::uint32_t a = sg.arc_offset[anchor]; a < sg.arc_offset[anchor + 1]; ++a) {
        std::uint32_t v = sg.arc_target[a];
        if (sg.scc[v] != comp) continue;
        std::vector<std::uint32_t> tail;
        if (v != anchor && !bfs_path_in_component(sg, comp, v, anchor, tail)) continue;
        std::vector<std::uint32_t> arcs;
        arcs.push_back(a);
        arcs.insert(arcs.end(), tail.begin(), tail.end());
        if (best_arcs.empty() || arcs.size() < best_arcs.size()) best_arcs = std::move(arcs);
    }
    if (best_arcs.empty()) return std::nullopt;

    std::vector<std::uint32_t> nodes;
    nodes.push_back(anchor);
    for (std::size_t i = 0; i + 1 < best_arcs.size(); ++i) {
        nodes.push_back(sg.arc_target[best_arcs[i]]);
    }
    return project_witness(g, sg, nodes, best_arcs);
}

std::optional<CycleWitness> exists_covering_sound_cycle(const PairedDbGraph& g, long d,
                                                        const SolverOptions& opts) {
    if (g.edge_count() == 0) return std::nullopt;
    StateGraph sg = build_state_graph(g, d, opts);
    const std::size_t n = sg.node_count();
    if (n == 0) return std::nullopt;

    // Distinct projected edges per component, over internal arcs only.
    std::vector<std::pair<std::int32_t, std::uint32_t>> proj;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t a = sg.arc_offset[u]; a < sg.arc_offset[u + 1]; ++a) {
            if (sg.scc[sg.arc_target[a]] == sg.scc[u]) {
                proj.emplace_back(sg.scc[u], sg.arc_edge[a]);
            }
        }
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());

    std::int32_t comp_count = 1 + *std::max_element(sg.scc.begin(), sg.scc.end());
    std::vector<std::uint32_t> edge_coverage(comp_count, 0);
    for (const auto& [comp, edge] : proj) edge_coverage[comp]++;

    std::int32_t chosen = -1;
    for (std::uint32_t i = 0; i < n && chosen < 0; ++i) {
        if (edge_coverage[sg.scc[i]] == static_cast<std::uint32_t>(g.edge_count())) {
            chosen = sg.scc[i];
        }
    }
    if (chosen < 0) return std::nullopt;

    // One required arc per graph edge, first in arc order within the
    // component; chain them with shortest connecting paths.
    std::vector<std::uint32_t> required(g.edge_count(), kNone);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (sg.scc[u] != chosen) continue;
        for (std::uint32_t a = sg.arc_offset[u]; a < sg.arc_offset[u + 1]; ++a) {
            if (sg.scc[sg.arc_target[a]] != chosen) continue;
            if (required[sg.arc_edge[a]] == kNone) required[sg.arc_edge[a]] = a;
        }
    }

    std::vector<std::uint32_t> walk_arcs;
    std::uint32_t start = arc_source(sg, required[0]);
    std::uint32_t cur = start;
    std::vector<std::uint32_t> path;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::uint32_t r = required[e];
        std::uint32_t src = arc_source(sg, r);
        if (!bfs_path_in_component(sg, chosen, cur, src, path)) {
            throw std::logic_error("covering component is not strongly connected");
        }
        walk_arcs.insert(walk_arcs.end(), path.begin(), path.end());
        walk_arcs.push_back(r);
        cur = sg.arc_target[r];
    }
    if (!bfs_path_in_component(sg, chosen, cur, start, path)) {
        throw std::logic_error("covering component is not strongly connected");
    }
    walk_arcs.insert(walk_arcs.end(), path.begin(), path.end());

    std::vector<std::uint32_t> nodes;
    nodes.reserve(walk_arcs.size());
    nodes.push_back(start);
    for (std::size_t i = 0; i + 1 < walk_arcs.size(); ++i) {
        nodes.push_back(sg.arc_target[walk_arcs[i]]);
    }
    return project_witness(g, sg, nodes, walk_arcs);
}

}  // namespace pdbg::solver
