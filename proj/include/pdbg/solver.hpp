#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <string>
#include <vector>

#include "pdbg/core.hpp"

// Exact deciders for sound-cycle and covering-sound-cycle existence.
//
// The search structure is a product state graph: a node is (vertex, window
// of the d most recent second-component characters, oldest first), and an
// arc exists for a graph edge whose head emits a first-component character
// equal to the oldest window entry. Closed walks in the state graph
// correspond exactly to sound cycles of the underlying graph, so existence
// reduces to cycle detection and covering reduces to finding a strongly
// connected component whose arcs project onto the whole edge set.

namespace pdbg::solver {

/// Thrown when the state count exceeds the configured cap. Never a wrong
/// answer: callers see an explicit resource failure instead.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    std::size_t max_states = 10'000'000;
};

struct StateGraph {
    long shift = 0;
    int window_len = 0;                      // symbols per window (= d)
    std::vector<int> node_vertex;            // graph vertex per node
    std::vector<std::uint32_t> node_window;  // window id per node
    std::string window_data;                 // packed windows, 2 bytes/symbol
    std::vector<std::uint32_t> arc_offset;   // CSR, size node_count()+1
    std::vector<std::uint32_t> arc_target;
    std::vector<std::uint32_t> arc_edge;     // projected graph edge per arc
    std::vector<std::int32_t> scc;           // component id per node

    std::size_t node_count() const { return node_vertex.size(); }
    std::size_t arc_count() const { return arc_target.size(); }

    std::string_view window_bytes(std::uint32_t wid) const;
    SymbolString window_symbols(std::size_t node) const;
    std::optional<std::size_t> find_node(int vertex, const SymbolString& window) const;
};

/// Builds the state graph restricted to realizable windows (those produced
/// by actual depth-d walks). Node and arc ordering is deterministic.
StateGraph build_state_graph(const PairedDbGraph& g, long d, const SolverOptions& opts = {});

/// Returns a witness iff the state graph contains a directed cycle. The
/// witness is the vertex projection of a shortest state cycle through the
/// lowest-numbered node of the first cyclic component.
std::optional<CycleWitness> exists_sound_cycle(const PairedDbGraph& g, long d,
                                               const SolverOptions& opts = {});

/// Returns a witness iff some strongly connected component of the state
/// graph projects onto the complete edge set of g. The witness traverses,
/// for each graph edge, one arc projecting to it.
std::optional<CycleWitness> exists_covering_sound_cycle(const PairedDbGraph& g, long d,
                                                        const SolverOptions& opts = {});

}  // namespace pdbg::solver
