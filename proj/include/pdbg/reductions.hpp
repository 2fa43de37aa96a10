#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdbg/core.hpp"
#include "pdbg/undirected.hpp"

// The hardness-reduction chain: graph doubling, hamiltonian-path
// constructors, the block gadget producing an order-1 paired de Bruijn
// instance, the covering witness built from a hamiltonian cycle, the
// order-lifting step and the binary-alphabet encoding.

namespace pdbg::reductions {

/// Deterministic mapping from source vertices/edges to target vertices and
/// edge paths; shift_out is the shift of the produced instance. Used to
/// transport witnesses forward.
struct ReductionTrace {
    std::map<std::string, std::vector<std::string>> vertex_map;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> edge_map;
    long shift_out = 0;
};

struct ReducedInstance {
    PairedDbGraph graph;
    long d = 0;
    ReductionTrace trace;
};

/// Result of doubling: duplicate vertex 1 into a1/b1, clone the whole graph
/// twice, and join the clones through fresh vertices a2/b2. Maps positive
/// hamiltonian-cycle instances to graphs with a hamiltonian cycle and
/// negative ones to graphs without hamiltonian paths.
struct DoubledGraph {
    UndirectedGraph graph;
    int a1 = 0, b1 = 0, a2 = 0, b2 = 0, a3 = 0, b3 = 0;
    std::vector<int> copy1;  // source j >= 2 -> index in the first clone
    std::vector<int> copy2;  // source j >= 2 -> index in the second clone
};

DoubledGraph hc_to_promise(const UndirectedGraph& g);

/// Hamiltonian cycle of the doubled graph built from one of g:
/// a1, path through the first clone, b1, b2, b3, path back through the
/// second clone, a3, a2.
HamCycle promote_hc_witness(const UndirectedGraph& g, const HamCycle& c);

/// Hamiltonian path starting at v (a rotation of the cycle).
std::vector<int> ham_path_with_endpoint(const UndirectedGraph& g, const HamCycle& c, int v);

/// Hamiltonian path containing {u, v} with u immediately before v. The
/// cycle is oriented so that u precedes v, then the path runs forward from
/// v's successor around to u, jumps to v, and descends back.
std::vector<int> ham_path_through_edge(const UndirectedGraph& g, const HamCycle& c, int u,
                                       int v);

/// Hamiltonian path containing {u, v} such that v lies between u and w.
std::vector<int> ham_path_ordered(const UndirectedGraph& g, const HamCycle& c, int u, int v,
                                  int w);

/// The block gadget: 2n+2 separator vertices and 2n+2 blocks over a
/// block-partitioned alphabet, order 1, shift n+1. Output ids follow the
/// scheme "s<i>", "v<block>_<j>", with ' and '' for the pivot and second
/// copies.
ReducedInstance promise_to_pdbg(const UndirectedGraph& g);

/// Covering sound cycle on promise_to_pdbg(g), assembled from one base pass
/// plus one pass per endpoint/through-edge/ordered-path property of the
/// hamiltonian cycle, all cut and joined at s1.
CycleWitness build_witness_cycle(const UndirectedGraph& g, const HamCycle& c);

/// Order lifting k=1 -> k', shift d -> k'*d: each vertex becomes a chain of
/// k' vertices padded with a fresh symbol, each edge connects chain end to
/// chain start.
ReducedInstance lift_k(const PairedDbGraph& g, long d, int k_prime);

/// Binary-alphabet encoding of an order-1 instance: order becomes 4l+5 and
/// the shift (4l+10)*d with l = ceil(log2 |alphabet|). Each edge expands
/// into a path of 4l+9 intermediate window vertices; windows shared between
/// paths are merged, as vertices are identified with their bilabels.
ReducedInstance binarize(const PairedDbGraph& g, long d);

/// l = ceil(log2 sigma), for sigma >= 2.
int binary_code_width(int sigma);

/// The 2l-digit expansion of index: each bit 0 -> 01, each bit 1 -> 10.
/// Contains no run of three equal digits and does not begin or end with a
/// repeated digit.
SymbolString binary_encoding(int index, int code_width);

/// Maps a cyclic witness through a lift/binarize trace: each vertex is
/// replaced by its image chain and each step by the interior of its edge
/// path.
CycleWitness transport_witness(const ReductionTrace& trace, const CycleWitness& w);

}  // namespace pdbg::reductions
