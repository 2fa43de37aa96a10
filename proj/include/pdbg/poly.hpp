#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdbg/core.hpp"

// Polynomial-time deciders for the two easy regimes: unary alphabets and
// order-0 graphs.

namespace pdbg::poly {

/// Projection of an order-0 graph: one node per alphabet symbol, one arc
/// (u, v) per edge bilabeled (u, v). Loops allowed.
struct CharDigraph {
    Alphabet alphabet;
    std::vector<std::pair<SymbolId, SymbolId>> arcs;

    bool has_arc(SymbolId from, SymbolId to) const;
};

/// |alphabet| = 1: the graph has at most one vertex and one edge, and every
/// cycle is sound, so both the plain and the covering question reduce to
/// "does the loop edge exist".
bool solve_unary_alphabet(const PairedDbGraph& g, long d, bool covering);

CharDigraph project_k0(const PairedDbGraph& g);

/// k = 0 decision. Plain variant: the projection has a directed cycle.
/// Covering variant: every arc stays inside its strongly connected
/// component and the number of arc-bearing components is at most d (at
/// d = 0 the sound steps are exactly the loop arcs, so covering demands
/// that every arc is a loop).
bool solve_k0(const PairedDbGraph& g, long d, bool covering);

/// Minimum number of closed walks covering all arcs of h: none if some arc
/// leaves its strongly connected component, otherwise the number of
/// arc-bearing components.
std::optional<long> min_closed_walk_cover_count(const CharDigraph& h);

}  // namespace pdbg::poly
