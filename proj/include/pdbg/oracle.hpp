#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdbg/core.hpp"
#include "pdbg/poly.hpp"
#include "pdbg/undirected.hpp"

// Brute-force ground truth, built directly on the definitions. Nothing in
// here may call into the solver or the polynomial deciders: candidate
// cycles are enumerated as raw walks and each one is accepted or rejected
// by spelling it and applying matches_with_shift, nothing else.

namespace pdbg::oracle {

/// All closed walks of length <= lmax (up to rotation) whose spelled cyclic
/// pair matches with shift d. Enumeration stops early once max_count
/// witnesses were found. Reported witnesses are rotation-canonical: no two
/// are rotations of each other.
std::vector<CycleWitness> enumerate_sound_cycles(const PairedDbGraph& g, long d,
                                                 std::size_t lmax,
                                                 std::size_t max_count = SIZE_MAX);

/// Minimum number of closed walks (each of length <= max_len) covering all
/// arcs of h, if at most max_walks; nullopt when unachievable within the
/// bounds.
std::optional<long> brute_cover_count(const poly::CharDigraph& h, long max_walks,
                                      long max_len);

/// Exhaustive backtracking searches; exact, intended for n <= 12.
std::optional<HamCycle> find_ham_cycle(const UndirectedGraph& g);
std::optional<std::vector<int>> find_ham_path(const UndirectedGraph& g);

}  // namespace pdbg::oracle
