#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

// Core model: paired de Bruijn graphs, spelling, shift-matching, soundness
// and covering. Vertices and edges carry bilabels (ordered pairs of
// equal-length symbol strings). All bilabels within a graph must be
// pairwise distinct; edge bilabels are implied by the endpoints except at
// order 0, where they are stored explicitly per edge.

namespace pdbg {

using SymbolId = std::int32_t;
using SymbolString = std::vector<SymbolId>;

/// Finite ordered set of distinct tokens. Iteration order is insertion
/// order and is part of the value (it drives deterministic serialization
/// and the binary codebook of reductions).
class Alphabet {
public:
    Alphabet() = default;

    /// Adds a token and returns its id. Tokens must be non-empty, must not
    /// contain whitespace or ',', and must not be the literal "-" (reserved
    /// by the instance file format for the empty string).
    SymbolId add(const std::string& token);

    std::optional<SymbolId> find(const std::string& token) const;
    const std::string& token(SymbolId id) const;
    int size() const { return static_cast<int>(tokens_.size()); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    /// Renders a symbol string for messages and DOT labels.
    std::string render(const SymbolString& s) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

/// Ordered pair of symbol strings of the same length.
struct Bilabel {
    SymbolString first;
    SymbolString second;

    bool operator==(const Bilabel& other) const {
        return first == other.first && second == other.second;
    }
    bool operator<(const Bilabel& other) const {
        return first != other.first ? first < other.first : second < other.second;
    }
};

struct Edge {
    int from = -1;
    int to = -1;
    std::optional<Bilabel> label;  // engaged iff the graph has order 0
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// A walk given by vertex ids; consecutive pairs must be edges. At order 0
/// the vertex sequence does not identify the traversed edges (parallel
/// loops), so the per-step edge bilabels are carried explicitly.
struct Walk {
    std::vector<std::string> vertices;
    std::vector<Bilabel> edge_labels;  // k=0 only; size = vertices.size()-1
};

/// A closed walk (interpreted cyclically) together with the shift it is
/// claimed sound for. At order 0 edge_labels has one entry per step
/// including the wrap-around step.
struct CycleWitness {
    std::vector<std::string> vertices;
    long shift = 0;
    std::vector<Bilabel> edge_labels;  // k=0 only; size = vertices.size()

    bool operator==(const CycleWitness& other) const {
        return vertices == other.vertices && shift == other.shift &&
               edge_labels == other.edge_labels;
    }
};

/// Pair of strings spelled by a walk; cyclic for closed walks.
struct SpelledPair {
    SymbolString first;
    SymbolString second;
    bool cyclic = false;

    std::size_t length() const { return first.size(); }
};

class PairedDbGraph {
public:
    PairedDbGraph(int k, Alphabet alphabet);

    int order() const { return k_; }
    const Alphabet& alphabet() const { return alphabet_; }

    /// Adds a vertex. Duplicate ids are rejected outright; duplicate
    /// bilabels are representable and reported by validate().
    int add_vertex(const std::string& id, Bilabel label);

    /// Adds an edge between existing vertices (order >= 1 form).
    int add_edge(const std::string& from, const std::string& to);
    /// Adds an order-0 edge with its explicit length-1 bilabel.
    int add_edge(const std::string& from, const std::string& to, Bilabel label);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::optional<int> vertex_index(const std::string& id) const;
    const std::string& vertex_id(int idx) const { return vertex_ids_.at(idx); }
    const Bilabel& vertex_label(int idx) const { return vertex_labels_.at(idx); }
    const Edge& edge(int idx) const { return edges_.at(idx); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int vertex) const { return out_edges_.at(vertex); }

    /// The bilabel of an edge: implied by the endpoints for k >= 1, the
    /// stored label at k = 0.
    Bilabel edge_label(int edge_idx) const;

    /// The unique edge from u to v, if exactly one exists.
    std::optional<int> find_edge(int from, int to) const;

    /// Checks every structural invariant and reports all violations:
    /// label lengths, overlap consistency for each edge, and pairwise
    /// distinctness of vertex and edge bilabels.
    ValidationReport validate() const;

    bool operator==(const PairedDbGraph& other) const;

private:
    int k_ = 0;
    Alphabet alphabet_;
    std::vector<std::string> vertex_ids_;
    std::vector<Bilabel> vertex_labels_;
    std::unordered_map<std::string, int> id_to_index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_edges_;
};

/// Resolves a walk to vertex indices and per-step edge indices, throwing
/// std::invalid_argument if some step is not an edge of g (or, at k = 0,
/// if a step is ambiguous and no edge labels were supplied).
struct ResolvedWalk {
    std::vector<int> vertices;
    std::vector<int> edges;  // one per step; cyclic walks include the wrap step
};
ResolvedWalk resolve_walk(const PairedDbGraph& g, const Walk& w);
ResolvedWalk resolve_walk(const PairedDbGraph& g, const CycleWitness& w);

SpelledPair spell(const PairedDbGraph& g, const Walk& w);
SpelledPair spell(const PairedDbGraph& g, const CycleWitness& w);

/// Linear: s[i+d] = t[i] for all 1 <= i <= n-d (d <= n required).
/// Cyclic: the same with positions taken mod n, i.e. d is reduced mod n
/// first; this coincides with the two-condition form for 0 <= d <= n.
bool matches_with_shift(const SpelledPair& p, long d);

bool is_sound(const PairedDbGraph& g, const Walk& w, long d);
bool is_sound(const PairedDbGraph& g, const CycleWitness& w, long d);

/// True iff every edge of g is traversed by the closed walk.
bool is_covering(const PairedDbGraph& g, const CycleWitness& w);

/// Rotation r of a cyclic witness (vertex r becomes the start).
CycleWitness rotate(const CycleWitness& w, std::size_t r);

}  // namespace pdbg
