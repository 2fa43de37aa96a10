#pragma once

#include <string>
#include <vector>

#include "pdbg/core.hpp"

namespace test_helpers {

inline pdbg::Alphabet letters(const std::string& tokens) {
    pdbg::Alphabet a;
    for (char c : tokens) a.add(std::string(1, c));
    return a;
}

inline pdbg::Bilabel bl(const pdbg::PairedDbGraph& g, const std::string& first,
                        const std::string& second) {
    pdbg::Bilabel out;
    for (char c : first) out.first.push_back(*g.alphabet().find(std::string(1, c)));
    for (char c : second) out.second.push_back(*g.alphabet().find(std::string(1, c)));
    return out;
}

struct VertexSpec {
    std::string id;
    std::string first;
    std::string second;
};

// Order-k graph from single-character tokens.
inline pdbg::PairedDbGraph make_graph(int k, const std::string& symbols,
                                      const std::vector<VertexSpec>& vertices,
                                      const std::vector<std::pair<std::string, std::string>>&
                                          edges) {
    pdbg::PairedDbGraph g(k, letters(symbols));
    for (const auto& v : vertices) g.add_vertex(v.id, bl(g, v.first, v.second));
    for (const auto& [from, to] : edges) g.add_edge(from, to);
    return g;
}

// Order-0 graph: one vertex "v", loop edges given by 2-character strings.
inline pdbg::PairedDbGraph make_k0(const std::string& symbols,
                                   const std::vector<std::string>& loop_labels) {
    pdbg::PairedDbGraph g(0, letters(symbols));
    g.add_vertex("v", pdbg::Bilabel{});
    for (const auto& l : loop_labels) {
        g.add_edge("v", "v", bl(g, l.substr(0, 1), l.substr(1, 1)));
    }
    return g;
}

inline std::string spelled(const pdbg::PairedDbGraph& g, const pdbg::SymbolString& s) {
    std::string out;
    for (pdbg::SymbolId id : s) out += g.alphabet().token(id);
    return out;
}

}  // namespace test_helpers
