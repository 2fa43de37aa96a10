#include "pdbg/io.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pdbg::io {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

// Reads the next meaningful line (skipping blanks and comments).
bool next_line(std::istream& in, std::vector<std::string>& words) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        words = split_words(line);
        if (words.empty() || words[0][0] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) fail("malformed " + what + " '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail("malformed " + what + " '" + s + "'");
    } catch (const std::out_of_range&) {
        fail(what + " out of range '" + s + "'");
    }
}

SymbolString parse_component(const std::string& field, const Alphabet& alph) {
    SymbolString out;
    if (field == "-") return out;
    std::size_t start = 0;
    while (start <= field.size()) {
        std::size_t comma = field.find(',', start);
        std::string token = field.substr(start, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - start);
        auto id = alph.find(token);
        if (!id) fail("unknown symbol '" + token + "'");
        out.push_back(*id);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string render_component(const SymbolString& s, const Alphabet& alph) {
    if (s.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += alph.token(s[i]);
    }
    return out;
}

long parse_shift_line(const std::vector<std::string>& words) {
    if (words.size() >= 2 && words[1] == "unary") {
        if (words.size() == 2) return 0;
        if (words.size() == 3) {
            for (char c : words[2]) {
                if (c != '1') fail("unary shift must consist of '1' characters");
            }
            return static_cast<long>(words[2].size());
        }
        fail("malformed d line");
    }
    if (words.size() == 2) {
        long d = parse_long(words[1], "shift");
        if (d < 0) fail("shift must be non-negative");
        return d;
    }
    fail("malformed d line");
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::vector<std::string> words;
    if (!next_line(in, words) || words.size() != 2 || words[0] != "pdbg" || words[1] != "1") {
        fail("expected header 'pdbg 1'");
    }
    std::optional<int> k;
    std::optional<Alphabet> alph;
    std::optional<PairedDbGraph> graph;
    std::optional<long> d;

    auto graph_ready = [&]() -> PairedDbGraph& {
        if (!graph) {
            if (!k || !alph) fail("vertices/edges before k and alphabet");
            graph.emplace(*k, *alph);
        }
        return *graph;
    };

    while (next_line(in, words)) {
        if (words[0] == "k" && words.size() == 2) {
            if (k) fail("duplicate k line");
            long v = parse_long(words[1], "k");
            if (v < 0) fail("k must be non-negative");
            k = static_cast<int>(v);
        } else if (words[0] == "alphabet") {
            if (alph) fail("duplicate alphabet line");
            Alphabet a;
            for (std::size_t i = 1; i < words.size(); ++i) a.add(words[i]);
            alph = std::move(a);
        } else if (words[0] == "vertex") {
            if (words.size() != 4) fail("vertex line needs id and two components");
            PairedDbGraph& g = graph_ready();
            g.add_vertex(words[1], Bilabel{parse_component(words[2], g.alphabet()),
                                           parse_component(words[3], g.alphabet())});
        } else if (words[0] == "edge") {
            PairedDbGraph& g = graph_ready();
            if (g.order() == 0) {
                if (words.size() != 5) fail("order-0 edge line needs from, to and a bilabel");
                g.add_edge(words[1], words[2],
                           Bilabel{parse_component(words[3], g.alphabet()),
                                   parse_component(words[4], g.alphabet())});
            } else {
                if (words.size() != 3) fail("edge line needs from and to");
                g.add_edge(words[1], words[2]);
            }
        } else if (words[0] == "d") {
            if (d) fail("duplicate d line");
            d = parse_shift_line(words);
        } else {
            fail("unknown directive '" + words[0] + "'");
        }
    }
    if (!d) fail("missing d line");
    graph_ready();
    return Instance{std::move(*graph), *d};
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string serialize_instance(const PairedDbGraph& g, long d) {
    std::ostringstream out;
    out << "pdbg 1\n";
    out << "k " << g.order() << "\n";
    out << "alphabet";
    for (const auto& t : g.alphabet().tokens()) out << ' ' << t;
    out << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << g.vertex_id(v) << ' '
            << render_component(g.vertex_label(v).first, g.alphabet()) << ' '
            << render_component(g.vertex_label(v).second, g.alphabet()) << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << "edge " << g.vertex_id(edge.from) << ' ' << g.vertex_id(edge.to);
        if (edge.label) {
            out << ' ' << render_component(edge.label->first, g.alphabet()) << ' '
                << render_component(edge.label->second, g.alphabet());
        }
        out << "\n";
    }
    out << "d " << d << "\n";
    return out.str();
}

UndirectedGraph parse_ugraph(std::istream& in) {
    std::vector<std::string> words;
    if (!next_line(in, words) || words.size() != 2 || words[0] != "ugraph" ||
        words[1] != "1") {
        fail("expected header 'ugraph 1'");
    }
    if (!next_line(in, words) || words.size() != 2 || words[0] != "n") {
        fail("expected 'n <count>'");
    }
    long n = parse_long(words[1], "vertex count");
    if (n < 0) fail("vertex count must be non-negative");
    UndirectedGraph g(static_cast<int>(n));
    while (next_line(in, words)) {
        if (words[0] != "edge" || words.size() != 3) fail("expected 'edge <u> <v>'");
        g.add_edge(static_cast<int>(parse_long(words[1], "endpoint")),
                   static_cast<int>(parse_long(words[2], "endpoint")));
    }
    return g;
}

UndirectedGraph parse_ugraph_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_ugraph(ss);
}

std::string serialize_ugraph(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "ugraph 1\n";
    out << "n " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << "edge " << u << ' ' << v << "\n";
    return out.str();
}

HamCycle parse_hamcycle(std::istream& in) {
    std::vector<std::string> words;
    if (!next_line(in, words) || words.size() != 2 || words[0] != "hamcycle" ||
        words[1] != "1") {
        fail("expected header 'hamcycle 1'");
    }
    if (!next_line(in, words) || words.empty() || words[0] != "order") {
        fail("expected 'order <v1> <v2> ...'");
    }
    HamCycle c;
    for (std::size_t i = 1; i < words.size(); ++i) {
        c.order.push_back(static_cast<int>(parse_long(words[i], "vertex")));
    }
    return c;
}

std::string serialize_hamcycle(const HamCycle& c) {
    std::ostringstream out;
    out << "hamcycle 1\norder";
    for (int v : c.order) out << ' ' << v;
    out << "\n";
    return out.str();
}

CycleFile parse_cycle(std::istream& in, const Alphabet& alphabet) {
    std::vector<std::string> words;
    if (!next_line(in, words) || words.size() != 2 || words[0] != "pdbg-cycle" ||
        words[1] != "1") {
        fail("expected header 'pdbg-cycle 1'");
    }
    CycleFile out;
    bool have_d = false;
    while (next_line(in, words)) {
        if (words[0] == "d") {
            out.witness.shift = parse_shift_line(words);
            have_d = true;
        } else if (words[0] == "covering" && words.size() == 2) {
            out.covering = words[1] == "1";
        } else if (words[0] == "v" && words.size() == 2) {
            out.witness.vertices.push_back(words[1]);
        } else if (words[0] == "eb" && words.size() == 3) {
            out.witness.edge_labels.push_back(Bilabel{parse_component(words[1], alphabet),
                                                      parse_component(words[2], alphabet)});
        } else {
            fail("unknown cycle directive '" + words[0] + "'");
        }
    }
    if (!have_d) fail("missing d line");
    if (out.witness.vertices.empty()) fail("cycle has no vertices");
    if (!out.witness.edge_labels.empty() &&
        out.witness.edge_labels.size() != out.witness.vertices.size()) {
        fail("cycle edge label count must match vertex count");
    }
    return out;
}

std::string serialize_cycle(const PairedDbGraph& g, const CycleWitness& w, bool covering) {
    std::ostringstream out;
    out << "pdbg-cycle 1\n";
    out << "d " << w.shift << "\n";
    out << "covering " << (covering ? 1 : 0) << "\n";
    for (const auto& v : w.vertices) out << "v " << v << "\n";
    for (const auto& l : w.edge_labels) {
        out << "eb " << render_component(l.first, g.alphabet()) << ' '
            << render_component(l.second, g.alphabet()) << "\n";
    }
    return out.str();
}

reductions::ReductionTrace parse_trace(std::istream& in) {
    std::vector<std::string> words;
    if (!next_line(in, words) || words.size() != 2 || words[0] != "pdbg-trace" ||
        words[1] != "1") {
        fail("expected header 'pdbg-trace 1'");
    }
    reductions::ReductionTrace t;
    while (next_line(in, words)) {
        if (words[0] == "d" && words.size() == 2) {
            t.shift_out = parse_long(words[1], "shift");
        } else if (words[0] == "vmap" && words.size() >= 4 && words[2] == ":") {
            t.vertex_map[words[1]] =
                std::vector<std::string>(words.begin() + 3, words.end());
        } else if (words[0] == "emap" && words.size() >= 5 && words[3] == ":") {
            t.edge_map[{words[1], words[2]}] =
                std::vector<std::string>(words.begin() + 4, words.end());
        } else {
            fail("unknown trace directive '" + words[0] + "'");
        }
    }
    return t;
}

std::string serialize_trace(const reductions::ReductionTrace& t) {
    std::ostringstream out;
    out << "pdbg-trace 1\n";
    out << "d " << t.shift_out << "\n";
    for (const auto& [src, targets] : t.vertex_map) {
        out << "vmap " << src << " :";
        for (const auto& id : targets) out << ' ' << id;
        out << "\n";
    }
    for (const auto& [edge, path] : t.edge_map) {
        out << "emap " << edge.first << ' ' << edge.second << " :";
        for (const auto& id : path) out << ' ' << id;
        out << "\n";
    }
    return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const PairedDbGraph& g) {
    std::ostringstream out;
    out << "digraph pdbg {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Bilabel& l = g.vertex_label(v);
        out << "  \"" << dot_escape(g.vertex_id(v)) << "\" [label=\""
            << dot_escape(g.vertex_id(v)) << "\\n(" << dot_escape(g.alphabet().render(l.first))
            << "," << dot_escape(g.alphabet().render(l.second)) << ")\"];\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << "  \"" << dot_escape(g.vertex_id(edge.from)) << "\" -> \""
            << dot_escape(g.vertex_id(edge.to)) << "\"";
        if (edge.label) {
            out << " [label=\"(" << dot_escape(g.alphabet().render(edge.label->first)) << ","
                << dot_escape(g.alphabet().render(edge.label->second)) << ")\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

UndirectedGraph make_complete(int n) {
    UndirectedGraph g(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    }
    return g;
}

UndirectedGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    UndirectedGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    return g;
}

UndirectedGraph make_path(int n) {
    UndirectedGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

UndirectedGraph make_bowtie() {
    UndirectedGraph g(5);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    return g;
}

UndirectedGraph make_star_plus_edge() {
    UndirectedGraph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

UndirectedGraph make_random_ugraph(int n, std::uint64_t seed, int edge_percent) {
    std::mt19937_64 rng(seed);
    UndirectedGraph g(n);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
        }
    }
    return g;
}

Instance make_random_instance(std::uint64_t seed, const RandomInstanceParams& params) {
    if (params.max_symbols < 1 || params.max_vertices < 1 || params.max_shift < 0) {
        throw std::invalid_argument("invalid random instance parameters");
    }
    std::mt19937_64 rng(seed);
    const int nsym = 1 + static_cast<int>(rng() % params.max_symbols);
    int nv = 1 + static_cast<int>(rng() % params.max_vertices);
    nv = std::min(nv, nsym * nsym);
    const long d = static_cast<long>(rng() % (params.max_shift + 1));

    Alphabet alph;
    for (int i = 0; i < nsym; ++i) alph.add(std::string(1, static_cast<char>('a' + i)));

    // nv distinct bilabels out of the nsym^2 possible ones.
    std::vector<int> codes(static_cast<std::size_t>(nsym) * nsym);
    for (std::size_t i = 0; i < codes.size(); ++i) codes[i] = static_cast<int>(i);
    for (int i = 0; i < nv; ++i) {
        std::size_t j = i + rng() % (codes.size() - i);
        std::swap(codes[i], codes[j]);
    }

    PairedDbGraph g(1, alph);
    for (int i = 0; i < nv; ++i) {
        g.add_vertex("v" + std::to_string(i + 1),
                     Bilabel{{static_cast<SymbolId>(codes[i] / nsym)},
                             {static_cast<SymbolId>(codes[i] % nsym)}});
    }
    for (int u = 0; u < nv; ++u) {
        for (int v = 0; v < nv; ++v) {
            if (static_cast<int>(rng() % 100) < params.edge_percent) {
                g.add_edge(g.vertex_id(u), g.vertex_id(v));
            }
        }
    }
    return Instance{std::move(g), d};
}

}  // namespace pdbg::io
