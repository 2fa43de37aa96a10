#include "pdbg/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pdbg::reductions {

namespace {

void require_valid_cycle(const UndirectedGraph& g, const HamCycle& c) {
    if (!is_ham_cycle(g, c)) {
        throw std::invalid_argument("not a hamiltonian cycle of the given graph");
    }
}

std::string num(int x) { return std::to_string(x); }

// Gadget naming. primes: 0 plain, 1 pivot copy, 2 second copy.
std::string sep_id(int i) { return "s" + num(i); }
std::string block_id(int b, int j, int primes) {
    std::string s = "v" + num(b) + "_" + num(j);
    s.append(static_cast<std::size_t>(primes), '\'');
    return s;
}
std::string sep_token(int i) { return "t" + num(i); }
std::string block_token(int b, int j, int primes) {
    std::string s = "c" + num(b) + "_" + num(j);
    s.append(static_cast<std::size_t>(primes), '\'');
    return s;
}

}  // namespace

DoubledGraph hc_to_promise(const UndirectedGraph& g) {
    const int n = g.n;
    if (n < 3) throw std::invalid_argument("hc_to_promise requires at least three vertices");

    DoubledGraph out;
    out.graph = UndirectedGraph(2 * n + 4);
    out.a1 = 1;
    out.b1 = n + 1;
    out.a3 = n + 2;
    out.b3 = 2 * n + 2;
    out.a2 = 2 * n + 3;
    out.b2 = 2 * n + 4;
    out.copy1.assign(static_cast<std::size_t>(n) + 1, 0);
    out.copy2.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 2; j <= n; ++j) {
        out.copy1[j] = j;
        out.copy2[j] = n + 1 + j;
    }

    // Each clone holds vertex 1 twice (as a/b); every edge at vertex 1 is
    // duplicated accordingly, other edges are copied verbatim.
    auto add_clone_edges = [&](int a, int b, const std::vector<int>& m) {
        for (const auto& [u, v] : g.edges) {
            if (u == 1) {
                out.graph.add_edge(a, m[v]);
                out.graph.add_edge(b, m[v]);
            } else {
                out.graph.add_edge(m[u], m[v]);
            }
        }
    };
    add_clone_edges(out.a1, out.b1, out.copy1);
    add_clone_edges(out.a3, out.b3, out.copy2);
    out.graph.add_edge(out.a1, out.a2);
    out.graph.add_edge(out.a2, out.a3);
    out.graph.add_edge(out.b1, out.b2);
    out.graph.add_edge(out.b2, out.b3);
    return out;
}

HamCycle promote_hc_witness(const UndirectedGraph& g, const HamCycle& c) {
    require_valid_cycle(g, c);
    DoubledGraph dg = hc_to_promise(g);

    std::vector<int> rot = c.order;
    auto it = std::find(rot.begin(), rot.end(), 1);
    std::rotate(rot.begin(), it, rot.end());

    HamCycle out;
    out.order.push_back(dg.a1);
    for (std::size_t i = 1; i < rot.size(); ++i) out.order.push_back(dg.copy1[rot[i]]);
    out.order.push_back(dg.b1);
    out.order.push_back(dg.b2);
    out.order.push_back(dg.b3);
    for (std::size_t i = rot.size(); i-- > 1;) out.order.push_back(dg.copy2[rot[i]]);
    out.order.push_back(dg.a3);
    out.order.push_back(dg.a2);
    return out;
}

namespace {

// Orients the cycle numbering so that u precedes v, reversing it if needed.
std::vector<int> oriented_numbering(const HamCycle& c, int u, int v) {
    auto pos = [&](int x) {
        return std::distance(c.order.begin(), std::find(c.order.begin(), c.order.end(), x));
    };
    std::vector<int> numbering = c.order;
    if (pos(u) > pos(v)) std::reverse(numbering.begin(), numbering.end());
    return numbering;
}

std::vector<int> through_edge_path(const std::vector<int>& numbering, std::size_t i0,
                                   std::size_t j0) {
    // v_{j+1},...,v_n, v_1,...,v_i, v_j, v_{j-1},...,v_{i+1}
    std::vector<int> path;
    const std::size_t n = numbering.size();
    for (std::size_t t = j0 + 1; t < n; ++t) path.push_back(numbering[t]);
    for (std::size_t t = 0; t <= i0; ++t) path.push_back(numbering[t]);
    path.push_back(numbering[j0]);
    for (std::size_t t = j0; t-- > i0 + 1;) path.push_back(numbering[t]);
    return path;
}

}  // namespace

std::vector<int> ham_path_with_endpoint(const UndirectedGraph& g, const HamCycle& c, int v) {
    require_valid_cycle(g, c);
    if (v < 1 || v > g.n) throw std::invalid_argument("vertex out of range");
    std::vector<int> path = c.order;
    auto it = std::find(path.begin(), path.end(), v);
    std::rotate(path.begin(), it, path.end());
    return path;
}

std::vector<int> ham_path_through_edge(const UndirectedGraph& g, const HamCycle& c, int u,
                                       int v) {
    require_valid_cycle(g, c);
    if (u == v || !g.has_edge(u, v)) {
        throw std::invalid_argument("{u,v} is not an edge of the graph");
    }
    std::vector<int> numbering = oriented_numbering(c, u, v);
    std::size_t i0 = std::distance(numbering.begin(),
                                   std::find(numbering.begin(), numbering.end(), u));
    std::size_t j0 = std::distance(numbering.begin(),
                                   std::find(numbering.begin(), numbering.end(), v));
    return through_edge_path(numbering, i0, j0);
}

std::vector<int> ham_path_ordered(const UndirectedGraph& g, const HamCycle& c, int u, int v,
                                  int w) {
    require_valid_cycle(g, c);
    if (u == v || !g.has_edge(u, v)) {
        throw std::invalid_argument("{u,v} is not an edge of the graph");
    }
    if (w == u || w == v || w < 1 || w > g.n) {
        throw std::invalid_argument("w must be a vertex distinct from u and v");
    }
    std::vector<int> numbering = oriented_numbering(c, u, v);
    std::size_t i0 = std::distance(numbering.begin(),
                                   std::find(numbering.begin(), numbering.end(), u));
    std::size_t j0 = std::distance(numbering.begin(),
                                   std::find(numbering.begin(), numbering.end(), v));
    std::size_t k0 = std::distance(numbering.begin(),
                                   std::find(numbering.begin(), numbering.end(), w));
    if (i0 < k0 && k0 < j0) return through_edge_path(numbering, i0, j0);
    // v_{j-1},...,v_i, v_j, v_{j+1},...,v_n, v_1,...,v_{i-1}
    std::vector<int> path;
    const std::size_t n = numbering.size();
    for (std::size_t t = j0; t-- > i0;) path.push_back(numbering[t]);
    path.push_back(numbering[j0]);
    for (std::size_t t = j0 + 1; t < n; ++t) path.push_back(numbering[t]);
    for (std::size_t t = 0; t + 1 <= i0; ++t) path.push_back(numbering[t]);
    return path;
}

ReducedInstance promise_to_pdbg(const UndirectedGraph& g) {
    const int n = g.n;
    if (n < 3) throw std::invalid_argument("promise_to_pdbg requires at least three vertices");
    const int blocks = 2 * n + 2;

    Alphabet alph;
    alph.add("u");
    for (int i = 1; i <= blocks; ++i) alph.add(sep_token(i));
    for (int b = 2; b <= blocks; ++b) {
        if (b % 2 == 0) {
            for (int j = 1; j <= n; ++j) alph.add(block_token(b, j, 0));
        } else {
            const int m = b / 2;
            for (int j = 1; j <= n; ++j)
                if (j != m) alph.add(block_token(b, j, 0));
            alph.add(block_token(b, m, 1));
            for (int j = 1; j <= n; ++j)
                if (j != m) alph.add(block_token(b, j, 2));
        }
    }

    PairedDbGraph out(1, alph);
    auto sym = [&](const std::string& t) { return *out.alphabet().find(t); };
    auto add_v = [&](const std::string& id, const std::string& first,
                     const std::string& second) {
        out.add_vertex(id, Bilabel{{sym(first)}, {sym(second)}});
    };

    for (int i = 1; i <= blocks; ++i) {
        add_v(sep_id(i), sep_token(i), sep_token(i == blocks ? 1 : i + 1));
    }
    for (int j = 1; j <= n; ++j) add_v(block_id(1, j, 0), "u", block_token(2, j, 0));
    for (int b = 2; b <= blocks - 1; ++b) {
        const int m = b / 2;
        for (int j = 1; j <= n; ++j) {
            if (j == m) continue;
            add_v(block_id(b, j, 0), block_token(b, j, 0), block_token(b + 1, j, 0));
        }
        if (b % 2 == 0) {
            add_v(block_id(b, m, 1), block_token(b, m, 0), block_token(b + 1, m, 1));
        } else {
            add_v(block_id(b, m, 1), block_token(b, m, 1), block_token(b + 1, m, 0));
        }
        for (int j = 1; j <= n; ++j) {
            if (j == m) continue;
            if (b % 2 == 0) {
                add_v(block_id(b, j, 2), block_token(b, j, 0), block_token(b + 1, j, 2));
            } else {
                add_v(block_id(b, j, 2), block_token(b, j, 2), block_token(b + 1, j, 0));
            }
        }
    }
    for (int j = 1; j <= n; ++j) add_v(block_id(blocks, j, 0), block_token(blocks, j, 0), "u");

    std::set<std::pair<std::string, std::string>> added;
    auto add_e = [&](const std::string& from, const std::string& to) {
        if (added.emplace(from, to).second) out.add_edge(from, to);
    };

    for (int i = 1; i <= n; ++i) {
        add_e(sep_id(1), block_id(1, i, 0));
        add_e(block_id(1, i, 0), sep_id(2));
        add_e(sep_id(blocks), block_id(blocks, i, 0));
        add_e(block_id(blocks, i, 0), sep_id(1));
    }
    for (int b = 2; b <= blocks - 1; ++b) {
        const int m = b / 2;
        for (int j = 1; j <= n; ++j) {
            if (j == m) continue;
            add_e(sep_id(b), block_id(b, j, 0));
            add_e(block_id(b, j, 2), sep_id(b + 1));
        }
        add_e(sep_id(b), block_id(b, m, 1));
        add_e(block_id(b, m, 1), sep_id(b + 1));
    }
    // Per source edge, processed in both orientations.
    for (const auto& [x, y] : g.edges) {
        for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
            add_e(block_id(1, i, 0), block_id(1, j, 0));
            add_e(block_id(blocks, i, 0), block_id(blocks, j, 0));
            add_e(block_id(2 * j, i, 0), block_id(2 * j, j, 1));
            add_e(block_id(2 * j + 1, i, 0), block_id(2 * j + 1, j, 1));
            add_e(block_id(2 * i, i, 1), block_id(2 * i, j, 2));
            add_e(block_id(2 * i + 1, i, 1), block_id(2 * i + 1, j, 2));
            for (int r = 2; r <= blocks - 1; ++r) {
                const int m = r / 2;
                if (m == i || m == j) continue;
                add_e(block_id(r, i, 0), block_id(r, j, 0));
                add_e(block_id(r, i, 2), block_id(r, j, 2));
            }
        }
    }

    ReducedInstance result{std::move(out), n + 1, {}};
    result.trace.shift_out = n + 1;
    for (int j = 1; j <= n; ++j) {
        result.trace.vertex_map[num(j)] = {block_id(1, j, 0)};
    }
    for (const auto& [x, y] : g.edges) {
        for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
            result.trace.edge_map[{num(i), num(j)}] = {block_id(1, i, 0), block_id(1, j, 0)};
        }
    }
    return result;
}

namespace {

// One pass through the whole block circle following the hamiltonian path q;
// inside each middle block the pivot copy is crossed at q's position of the
// block's distinguished vertex.
void append_pass(std::vector<std::string>& out, const std::vector<int>& q, int n) {
    const int blocks = 2 * n + 2;
    out.push_back(sep_id(1));
    for (int t = 0; t < n; ++t) out.push_back(block_id(1, q[t], 0));
    for (int b = 2; b <= blocks - 1; ++b) {
        const int m = b / 2;
        out.push_back(sep_id(b));
        int r = static_cast<int>(
            std::distance(q.begin(), std::find(q.begin(), q.end(), m)));
        for (int t = 0; t < r; ++t) out.push_back(block_id(b, q[t], 0));
        out.push_back(block_id(b, m, 1));
        for (int t = r + 1; t < n; ++t) out.push_back(block_id(b, q[t], 2));
    }
    out.push_back(sep_id(blocks));
    for (int t = 0; t < n; ++t) out.push_back(block_id(blocks, q[t], 0));
}

}  // namespace

CycleWitness build_witness_cycle(const UndirectedGraph& g, const HamCycle& c) {
    require_valid_cycle(g, c);
    const int n = g.n;

    std::vector<std::string> seq;
    append_pass(seq, c.order, n);

    // Endpoint passes: one starting and one ending at each vertex.
    for (int i = 1; i <= n; ++i) {
        std::vector<int> start_at = ham_path_with_endpoint(g, c, i);
        append_pass(seq, start_at, n);
        std::reverse(start_at.begin(), start_at.end());
        append_pass(seq, start_at, n);
    }
    // Through-edge passes, both orientations.
    for (const auto& [x, y] : g.edges) {
        for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
            append_pass(seq, ham_path_through_edge(g, c, u, v), n);
        }
    }
    // Ordered passes: forward for the plain copies before the pivot,
    // reversed for the second copies after it.
    for (const auto& [x, y] : g.edges) {
        for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
            for (int w = 1; w <= n; ++w) {
                if (w == u || w == v) continue;
                std::vector<int> q = ham_path_ordered(g, c, u, v, w);
                append_pass(seq, q, n);
                std::reverse(q.begin(), q.end());
                append_pass(seq, q, n);
            }
        }
    }

    CycleWitness witness;
    witness.vertices = std::move(seq);
    witness.shift = n + 1;
    return witness;
}

ReducedInstance lift_k(const PairedDbGraph& g, long d, int k_prime) {
    if (g.order() != 1) throw std::invalid_argument("lift_k expects an order-1 instance");
    if (k_prime < 1) throw std::invalid_argument("k' must be at least 1");
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    {
        ValidationReport r = g.validate();
        if (!r.ok()) throw std::invalid_argument("invalid graph: " + r.violations.front());
    }

    Alphabet alph;
    for (const auto& t : g.alphabet().tokens()) alph.add(t);
    std::string pad = "f";
    for (int suffix = 1; alph.find(pad); ++suffix) pad = "f" + std::to_string(suffix);
    const SymbolId f = alph.add(pad);

    PairedDbGraph out(k_prime, alph);
    auto chain_id = [&](const std::string& src, int j) {
        return "L:" + src + "#" + std::to_string(j);
    };
    auto padded = [&](SymbolId a, int j) {
        // f^(k'-1-j) a f^j
        SymbolString s(static_cast<std::size_t>(k_prime), f);
        s[static_cast<std::size_t>(k_prime - 1 - j)] = a;
        return s;
    };

    ReductionTrace trace;
    trace.shift_out = static_cast<long>(k_prime) * d;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Bilabel& l = g.vertex_label(v);
        std::vector<std::string> chain;
        for (int j = 0; j < k_prime; ++j) {
            std::string id = chain_id(g.vertex_id(v), j);
            out.add_vertex(id, Bilabel{padded(l.first[0], j), padded(l.second[0], j)});
            chain.push_back(std::move(id));
        }
        for (int j = 0; j + 1 < k_prime; ++j) out.add_edge(chain[j], chain[j + 1]);
        trace.vertex_map[g.vertex_id(v)] = std::move(chain);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const std::string& u = g.vertex_id(g.edge(e).from);
        const std::string& v = g.vertex_id(g.edge(e).to);
        out.add_edge(chain_id(u, k_prime - 1), chain_id(v, 0));
        trace.edge_map[{u, v}] = {chain_id(u, k_prime - 1), chain_id(v, 0)};
    }
    return ReducedInstance{std::move(out), trace.shift_out, std::move(trace)};
}

int binary_code_width(int sigma) {
    if (sigma < 2) throw std::invalid_argument("binary code needs at least two symbols");
    int l = 1;
    while ((1 << l) < sigma) ++l;
    return l;
}

SymbolString binary_encoding(int index, int code_width) {
    SymbolString out;
    out.reserve(static_cast<std::size_t>(2 * code_width));
    for (int bit = code_width - 1; bit >= 0; --bit) {
        if ((index >> bit) & 1) {
            out.push_back(1);
            out.push_back(0);
        } else {
            out.push_back(0);
            out.push_back(1);
        }
    }
    return out;
}

ReducedInstance binarize(const PairedDbGraph& g, long d) {
    if (g.order() != 1) throw std::invalid_argument("binarize expects an order-1 instance");
    if (g.alphabet().size() < 2) {
        throw std::invalid_argument("binarize requires at least two symbols");
    }
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    {
        ValidationReport r = g.validate();
        if (!r.ok()) throw std::invalid_argument("invalid graph: " + r.violations.front());
    }

    const int l = binary_code_width(g.alphabet().size());
    const int k_out = 4 * l + 5;
    const SymbolString marker = {0, 1, 1, 1, 0};
    const SymbolString junction = {1, 0, 0, 0, 1};

    Alphabet alph;
    alph.add("0");
    alph.add("1");
    PairedDbGraph out(k_out, alph);

    auto vertex_code = [&](SymbolId c) {
        SymbolString enc = binary_encoding(c, l);
        SymbolString s = enc;
        s.insert(s.end(), marker.begin(), marker.end());
        s.insert(s.end(), enc.begin(), enc.end());
        return s;
    };

    std::map<Bilabel, std::string> by_label;
    ReductionTrace trace;
    trace.shift_out = static_cast<long>(4 * l + 10) * d;

    for (int v = 0; v < g.vertex_count(); ++v) {
        const Bilabel& src = g.vertex_label(v);
        Bilabel label{vertex_code(src.first[0]), vertex_code(src.second[0])};
        std::string id = "B:" + g.vertex_id(v);
        by_label.emplace(label, id);
        out.add_vertex(id, std::move(label));
        trace.vertex_map[g.vertex_id(v)] = {id};
    }

    std::set<std::pair<std::string, std::string>> added;
    auto add_e = [&](const std::string& from, const std::string& to) {
        if (added.emplace(from, to).second) out.add_edge(from, to);
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const Bilabel& lu = g.vertex_label(edge.from);
        const Bilabel& lv = g.vertex_label(edge.to);
        // Spelled pair of the whole expanded path.
        SymbolString s1 = vertex_code(lu.first[0]);
        s1.insert(s1.end(), junction.begin(), junction.end());
        SymbolString tail1 = vertex_code(lv.first[0]);
        s1.insert(s1.end(), tail1.begin(), tail1.end());
        SymbolString s2 = vertex_code(lu.second[0]);
        s2.insert(s2.end(), junction.begin(), junction.end());
        SymbolString tail2 = vertex_code(lv.second[0]);
        s2.insert(s2.end(), tail2.begin(), tail2.end());

        std::vector<std::string> path;
        path.push_back("B:" + g.vertex_id(edge.from));
        for (int p = 1; p <= 4 * l + 9; ++p) {
            Bilabel window{
                SymbolString(s1.begin() + p, s1.begin() + p + k_out),
                SymbolString(s2.begin() + p, s2.begin() + p + k_out)};
            auto it = by_label.find(window);
            std::string id;
            if (it != by_label.end()) {
                id = it->second;
            } else {
                id = "B:e" + std::to_string(e) + "#" + std::to_string(p);
                by_label.emplace(window, id);
                out.add_vertex(id, window);
            }
            add_e(path.back(), id);
            path.push_back(std::move(id));
        }
        add_e(path.back(), "B:" + g.vertex_id(edge.to));
        path.push_back("B:" + g.vertex_id(edge.to));
        trace.edge_map[{g.vertex_id(edge.from), g.vertex_id(edge.to)}] = std::move(path);
    }
    return ReducedInstance{std::move(out), trace.shift_out, std::move(trace)};
}

CycleWitness transport_witness(const ReductionTrace& trace, const CycleWitness& w) {
    if (w.vertices.empty()) throw std::invalid_argument("witness must be non-empty");
    if (!w.edge_labels.empty()) {
        throw std::invalid_argument("witness transport expects an order-1 source witness");
    }
    CycleWitness out;
    out.shift = trace.shift_out;
    const std::size_t n = w.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& u = w.vertices[i];
        const std::string& v = w.vertices[(i + 1) % n];
        auto vm = trace.vertex_map.find(u);
        auto em = trace.edge_map.find({u, v});
        if (vm == trace.vertex_map.end() || em == trace.edge_map.end()) {
            throw std::invalid_argument("witness step is not covered by the trace");
        }
        out.vertices.insert(out.vertices.end(), vm->second.begin(), vm->second.end());
        if (em->second.size() > 2) {
            out.vertices.insert(out.vertices.end(), em->second.begin() + 1,
                                em->second.end() - 1);
        }
    }
    return out;
}

}  // namespace pdbg::reductions
