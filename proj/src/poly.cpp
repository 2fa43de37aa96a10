#include "pdbg/poly.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>

#include "pdbg/scc.hpp"

namespace pdbg::poly {

namespace {

void require_valid(const PairedDbGraph& g) {
    ValidationReport r = g.validate();
    if (!r.ok()) {
        throw std::invalid_argument("invalid graph: " + r.violations.front());
    }
}

std::vector<std::int32_t> scc_of(const CharDigraph& h) {
    const std::size_t n = static_cast<std::size_t>(h.alphabet.size());
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& [from, to] : h.arcs) {
        adj[static_cast<std::size_t>(from)].push_back(static_cast<std::uint32_t>(to));
    }
    return detail::tarjan_scc(n, [&](std::uint32_t v) {
        return std::span<const std::uint32_t>(adj[v]);
    });
}

}  // namespace

bool CharDigraph::has_arc(SymbolId from, SymbolId to) const {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(from, to)) != arcs.end();
}

bool solve_unary_alphabet(const PairedDbGraph& g, long d, bool covering) {
    if (g.alphabet().size() != 1) {
        throw std::invalid_argument("solve_unary_alphabet requires |alphabet| = 1");
    }
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    require_valid(g);
    (void)covering;  // at most one edge exists, so covering changes nothing
    return g.edge_count() >= 1;
}

CharDigraph project_k0(const PairedDbGraph& g) {
    if (g.order() != 0) throw std::invalid_argument("project_k0 requires order 0");
    require_valid(g);
    CharDigraph h;
    h.alphabet = g.alphabet();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Bilabel& l = *g.edge(e).label;
        h.arcs.emplace_back(l.first[0], l.second[0]);
    }
    return h;
}

bool solve_k0(const PairedDbGraph& g, long d, bool covering) {
    if (g.order() != 0) throw std::invalid_argument("solve_k0 requires order 0");
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    CharDigraph h = project_k0(g);
    auto comp = scc_of(h);

    if (!covering) {
        if (d == 0) {
            // Only loop arcs can be part of a shift-0 sound cycle.
            return std::any_of(h.arcs.begin(), h.arcs.end(),
                               [](const auto& a) { return a.first == a.second; });
        }
        return std::any_of(h.arcs.begin(), h.arcs.end(), [&](const auto& a) {
            return comp[a.first] == comp[a.second];
        });
    }

    if (h.arcs.empty()) return false;  // no edges, hence no cycle at all
    if (d == 0) {
        return std::all_of(h.arcs.begin(), h.arcs.end(),
                           [](const auto& a) { return a.first == a.second; });
    }
    std::set<std::int32_t> bearing;
    for (const auto& [from, to] : h.arcs) {
        if (comp[from] != comp[to]) return false;
        bearing.insert(comp[from]);
    }
    return static_cast<long>(bearing.size()) <= d;
}

std::optional<long> min_closed_walk_cover_count(const CharDigraph& h) {
    auto comp = scc_of(h);
    std::set<std::int32_t> bearing;
    for (const auto& [from, to] : h.arcs) {
        if (comp[from] != comp[to]) return std::nullopt;
        bearing.insert(comp[from]);
    }
    return static_cast<long>(bearing.size());
}

}  // namespace pdbg::poly
