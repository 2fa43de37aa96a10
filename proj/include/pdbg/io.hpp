#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pdbg/core.hpp"
#include "pdbg/reductions.hpp"
#include "pdbg/undirected.hpp"

// Line-oriented text formats with explicit version headers, DOT export, and
// deterministic instance generators. Blank lines and lines starting with
// '#' are ignored on input. The shift may be written in decimal ("d 4") or
// unary ("d unary 1111"); output always uses decimal.

namespace pdbg::io {

struct Instance {
    PairedDbGraph graph;
    long d = 0;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
std::string serialize_instance(const PairedDbGraph& g, long d);

UndirectedGraph parse_ugraph(std::istream& in);
UndirectedGraph parse_ugraph_text(const std::string& text);
std::string serialize_ugraph(const UndirectedGraph& g);

HamCycle parse_hamcycle(std::istream& in);
std::string serialize_hamcycle(const HamCycle& c);

struct CycleFile {
    CycleWitness witness;
    bool covering = false;
};
CycleFile parse_cycle(std::istream& in, const Alphabet& alphabet);
std::string serialize_cycle(const PairedDbGraph& g, const CycleWitness& w, bool covering);

reductions::ReductionTrace parse_trace(std::istream& in);
std::string serialize_trace(const reductions::ReductionTrace& t);

/// DOT rendering with bilabels as vertex labels.
std::string to_dot(const PairedDbGraph& g);

// Deterministic test families.
UndirectedGraph make_complete(int n);
UndirectedGraph make_cycle(int n);
UndirectedGraph make_path(int n);
UndirectedGraph make_bowtie();          // two triangles sharing vertex 3
UndirectedGraph make_star_plus_edge();  // K_{1,3} plus one edge; no hamiltonian cycle
UndirectedGraph make_random_ugraph(int n, std::uint64_t seed, int edge_percent);

struct RandomInstanceParams {
    int max_vertices = 6;
    int max_symbols = 4;
    int max_shift = 3;
    int edge_percent = 35;
};
/// Random order-1 instance with distinct vertex bilabels; fully determined
/// by the seed and parameters.
Instance make_random_instance(std::uint64_t seed, const RandomInstanceParams& params = {});

}  // namespace pdbg::io
