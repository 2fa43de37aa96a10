#include "pdbg/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pdbg {

namespace {

bool valid_token(const std::string& token) {
    if (token.empty() || token == "-") return false;
    for (char c : token) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    }
    return true;
}

}  // namespace

SymbolId Alphabet::add(const std::string& token) {
    if (!valid_token(token)) {
        throw std::invalid_argument("alphabet token '" + token + "' is not a valid token");
    }
    if (index_.count(token)) {
        throw std::invalid_argument("duplicate alphabet token '" + token + "'");
    }
    SymbolId id = static_cast<SymbolId>(tokens_.size());
    tokens_.push_back(token);
    index_.emplace(token, id);
    return id;
}

std::optional<SymbolId> Alphabet::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& Alphabet::token(SymbolId id) const {
    return tokens_.at(static_cast<std::size_t>(id));
}

std::string Alphabet::render(const SymbolString& s) const {
    bool all_single = true;
    for (const auto& t : tokens_) {
        if (t.size() != 1) { all_single = false; break; }
    }
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && !all_single) out += "\xc2\xb7";  // middle dot separator
        out += token(s[i]);
    }
    return out;
}

PairedDbGraph::PairedDbGraph(int k, Alphabet alphabet)
    : k_(k), alphabet_(std::move(alphabet)) {
    if (k < 0) throw std::invalid_argument("graph order must be non-negative");
}

int PairedDbGraph::add_vertex(const std::string& id, Bilabel label) {
    if (id.empty()) throw std::invalid_argument("vertex id must be non-empty");
    if (id_to_index_.count(id)) {
        throw std::invalid_argument("duplicate vertex id '" + id + "'");
    }
    if (label.first.size() != label.second.size()) {
        throw std::invalid_argument("bilabel components of '" + id + "' differ in length");
    }
    for (const auto& comp : {label.first, label.second}) {
        for (SymbolId s : comp) {
            if (s < 0 || s >= alphabet_.size()) {
                throw std::invalid_argument("bilabel of '" + id + "' uses an unknown symbol");
            }
        }
    }
    int idx = static_cast<int>(vertex_ids_.size());
    vertex_ids_.push_back(id);
    vertex_labels_.push_back(std::move(label));
    id_to_index_.emplace(id, idx);
    out_edges_.emplace_back();
    return idx;
}

int PairedDbGraph::add_edge(const std::string& from, const std::string& to) {
    if (k_ == 0) {
        throw std::invalid_argument("order-0 edges need an explicit bilabel");
    }
    auto u = vertex_index(from);
    auto v = vertex_index(to);
    if (!u || !v) throw std::invalid_argument("edge references unknown vertex");
    int idx = static_cast<int>(edges_.size());
    edges_.push_back(Edge{*u, *v, std::nullopt});
    out_edges_[*u].push_back(idx);
    return idx;
}

int PairedDbGraph::add_edge(const std::string& from, const std::string& to, Bilabel label) {
    if (k_ != 0) {
        throw std::invalid_argument("explicit edge bilabels are only stored at order 0");
    }
    if (label.first.size() != 1 || label.second.size() != 1) {
        throw std::invalid_argument("order-0 edge bilabel components must have length 1");
    }
    auto u = vertex_index(from);
    auto v = vertex_index(to);
    if (!u || !v) throw std::invalid_argument("edge references unknown vertex");
    for (const auto& comp : {label.first, label.second}) {
        if (comp[0] < 0 || comp[0] >= alphabet_.size()) {
            throw std::invalid_argument("edge bilabel uses an unknown symbol");
        }
    }
    int idx = static_cast<int>(edges_.size());
    edges_.push_back(Edge{*u, *v, std::move(label)});
    out_edges_[*u].push_back(idx);
    return idx;
}

std::optional<int> PairedDbGraph::vertex_index(const std::string& id) const {
    auto it = id_to_index_.find(id);
    if (it == id_to_index_.end()) return std::nullopt;
    return it->second;
}

Bilabel PairedDbGraph::edge_label(int edge_idx) const {
    const Edge& e = edges_.at(edge_idx);
    if (k_ == 0) return *e.label;
    const Bilabel& tail = vertex_labels_[e.from];
    const Bilabel& head = vertex_labels_[e.to];
    const std::size_t k = static_cast<std::size_t>(k_);
    if (tail.first.size() != k || head.first.size() != k) {
        throw std::invalid_argument("edge bilabel undefined: endpoint label has wrong length");
    }
    Bilabel out = tail;
    out.first.push_back(head.first.back());
    out.second.push_back(head.second.back());
    return out;
}

std::optional<int> PairedDbGraph::find_edge(int from, int to) const {
    std::optional<int> found;
    for (int e : out_edges_.at(from)) {
        if (edges_[e].to == to) {
            if (found) return std::nullopt;  // ambiguous
            found = e;
        }
    }
    return found;
}

ValidationReport PairedDbGraph::validate() const {
    ValidationReport report;
    const std::size_t k = static_cast<std::size_t>(k_);

    for (int i = 0; i < vertex_count(); ++i) {
        const Bilabel& l = vertex_labels_[i];
        if (l.first.size() != k || l.second.size() != k) {
            report.violations.push_back("vertex '" + vertex_ids_[i] +
                                        "': bilabel component length != k");
        }
    }

    std::map<Bilabel, int> seen_vertex;
    for (int i = 0; i < vertex_count(); ++i) {
        auto [it, inserted] = seen_vertex.emplace(vertex_labels_[i], i);
        if (!inserted) {
            report.violations.push_back("duplicate vertex bilabel: '" + vertex_ids_[i] +
                                        "' duplicates '" + vertex_ids_[it->second] + "'");
        }
    }

    for (int e = 0; e < edge_count(); ++e) {
        const Edge& edge = edges_[e];
        if (k_ >= 1) {
            const Bilabel& a = vertex_labels_[edge.from];
            const Bilabel& b = vertex_labels_[edge.to];
            if (a.first.size() == k && b.first.size() == k) {
                bool first_ok = std::equal(a.first.begin() + 1, a.first.end(), b.first.begin());
                bool second_ok = std::equal(a.second.begin() + 1, a.second.end(), b.second.begin());
                if (!first_ok) {
                    report.violations.push_back("edge '" + vertex_ids_[edge.from] + "' -> '" +
                                                vertex_ids_[edge.to] +
                                                "': first-component overlap mismatch");
                }
                if (!second_ok) {
                    report.violations.push_back("edge '" + vertex_ids_[edge.from] + "' -> '" +
                                                vertex_ids_[edge.to] +
                                                "': second-component overlap mismatch");
                }
            }
        }
    }

    std::map<Bilabel, int> seen_edge;
    for (int e = 0; e < edge_count(); ++e) {
        if (k_ >= 1) {
            // Edges whose endpoints already failed the length check have no
            // well-defined bilabel; they are reported above.
            const Bilabel& a = vertex_labels_[edges_[e].from];
            const Bilabel& b = vertex_labels_[edges_[e].to];
            if (a.first.size() != k || b.first.size() != k) continue;
        }
        Bilabel l = edge_label(e);
        auto [it, inserted] = seen_edge.emplace(std::move(l), e);
        if (!inserted) {
            const Edge& cur = edges_[e];
            const Edge& prev = edges_[it->second];
            report.violations.push_back("duplicate edge bilabel: '" + vertex_ids_[cur.from] +
                                        "' -> '" + vertex_ids_[cur.to] + "' duplicates '" +
                                        vertex_ids_[prev.from] + "' -> '" +
                                        vertex_ids_[prev.to] + "'");
        }
    }

    return report;
}

bool PairedDbGraph::operator==(const PairedDbGraph& other) const {
    if (k_ != other.k_ || !(alphabet_ == other.alphabet_)) return false;
    if (vertex_ids_ != other.vertex_ids_) return false;
    for (std::size_t i = 0; i < vertex_labels_.size(); ++i) {
        if (!(vertex_labels_[i] == other.vertex_labels_[i])) return false;
    }
    if (edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].from != other.edges_[i].from || edges_[i].to != other.edges_[i].to)
            return false;
        if (edges_[i].label.has_value() != other.edges_[i].label.has_value()) return false;
        if (edges_[i].label && !(*edges_[i].label == *other.edges_[i].label)) return false;
    }
    return true;
}

namespace {

ResolvedWalk resolve_steps(const PairedDbGraph& g, const std::vector<std::string>& ids,
                           const std::vector<Bilabel>& edge_labels, bool cyclic) {
    if (ids.empty()) throw std::invalid_argument("walk must be non-empty");
    ResolvedWalk out;
    out.vertices.reserve(ids.size());
    for (const auto& id : ids) {
        auto idx = g.vertex_index(id);
        if (!idx) throw std::invalid_argument("walk references unknown vertex '" + id + "'");
        out.vertices.push_back(*idx);
    }
    const std::size_t steps = cyclic ? ids.size() : ids.size() - 1;
    if (g.order() == 0 && !edge_labels.empty() && edge_labels.size() != steps) {
        throw std::invalid_argument("walk edge label count does not match step count");
    }
    out.edges.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        int u = out.vertices[i];
        int v = out.vertices[(i + 1) % out.vertices.size()];
        if (g.order() == 0 && !edge_labels.empty()) {
            std::optional<int> match;
            for (int e : g.out_edges(u)) {
                if (g.edge(e).to == v && *g.edge(e).label == edge_labels[i]) {
                    match = e;
                    break;
                }
            }
            if (!match) {
                throw std::invalid_argument("walk step " + std::to_string(i) +
                                            " is not an edge with the given bilabel");
            }
            out.edges.push_back(*match);
        } else {
            auto e = g.find_edge(u, v);
            if (!e) {
                bool any = false;
                for (int cand : g.out_edges(u)) {
                    if (g.edge(cand).to == v) { any = true; break; }
                }
                throw std::invalid_argument(
                    any ? "walk step " + std::to_string(i) +
                              " is ambiguous (parallel edges, no edge labels given)"
                        : "walk step " + std::to_string(i) + " ('" + ids[i] + "' -> '" +
                              ids[(i + 1) % ids.size()] + "') is not an edge");
            }
            out.edges.push_back(*e);
        }
    }
    return out;
}

SpelledPair spell_resolved(const PairedDbGraph& g, const ResolvedWalk& rw, bool cyclic) {
    SpelledPair p;
    p.cyclic = cyclic;
    if (g.order() >= 1) {
        for (int v : rw.vertices) {
            if (g.vertex_label(v).first.size() != static_cast<std::size_t>(g.order())) {
                throw std::invalid_argument("walk visits vertex '" + g.vertex_id(v) +
                                            "' with a malformed label");
            }
        }
        if (cyclic) {
            // Position i carries the first character of vertex i's label.
            for (int v : rw.vertices) {
                p.first.push_back(g.vertex_label(v).first.front());
                p.second.push_back(g.vertex_label(v).second.front());
            }
        } else {
            p.first = g.vertex_label(rw.vertices[0]).first;
            p.second = g.vertex_label(rw.vertices[0]).second;
            for (std::size_t i = 1; i < rw.vertices.size(); ++i) {
                p.first.push_back(g.vertex_label(rw.vertices[i]).first.back());
                p.second.push_back(g.vertex_label(rw.vertices[i]).second.back());
            }
        }
    } else {
        // Order 0: vertices spell nothing, each traversed edge contributes
        // its single-character bilabel.
        for (int e : rw.edges) {
            const Bilabel& l = *g.edge(e).label;
            p.first.push_back(l.first[0]);
            p.second.push_back(l.second[0]);
        }
    }
    return p;
}

}  // namespace

ResolvedWalk resolve_walk(const PairedDbGraph& g, const Walk& w) {
    return resolve_steps(g, w.vertices, w.edge_labels, /*cyclic=*/false);
}

ResolvedWalk resolve_walk(const PairedDbGraph& g, const CycleWitness& w) {
    return resolve_steps(g, w.vertices, w.edge_labels, /*cyclic=*/true);
}

SpelledPair spell(const PairedDbGraph& g, const Walk& w) {
    return spell_resolved(g, resolve_walk(g, w), /*cyclic=*/false);
}

SpelledPair spell(const PairedDbGraph& g, const CycleWitness& w) {
    return spell_resolved(g, resolve_walk(g, w), /*cyclic=*/true);
}

bool matches_with_shift(const SpelledPair& p, long d) {
    if (d < 0) throw std::invalid_argument("shift must be non-negative");
    const long n = static_cast<long>(p.length());
    if (!p.cyclic) {
        if (d > n) throw std::invalid_argument("linear matching requires d <= length");
        for (long i = 0; i + d < n; ++i) {
            if (p.first[i + d] != p.second[i]) return false;
        }
        return true;
    }
    if (n == 0) return true;
    const long dd = d % n;
    for (long i = 0; i < n; ++i) {
        if (p.second[i] != p.first[(i + dd) % n]) return false;
    }
    return true;
}

bool is_sound(const PairedDbGraph& g, const Walk& w, long d) {
    return matches_with_shift(spell(g, w), d);
}

bool is_sound(const PairedDbGraph& g, const CycleWitness& w, long d) {
    return matches_with_shift(spell(g, w), d);
}

bool is_covering(const PairedDbGraph& g, const CycleWitness& w) {
    ResolvedWalk rw = resolve_walk(g, w);
    std::vector<char> hit(static_cast<std::size_t>(g.edge_count()), 0);
    std::size_t distinct = 0;
    for (int e : rw.edges) {
        if (!hit[e]) {
            hit[e] = 1;
            ++distinct;
        }
    }
    return distinct == static_cast<std::size_t>(g.edge_count());
}

CycleWitness rotate(const CycleWitness& w, std::size_t r) {
    if (w.vertices.empty()) return w;
    r %= w.vertices.size();
    CycleWitness out;
    out.shift = w.shift;
    out.vertices.insert(out.vertices.end(), w.vertices.begin() + r, w.vertices.end());
    out.vertices.insert(out.vertices.end(), w.vertices.begin(), w.vertices.begin() + r);
    if (!w.edge_labels.empty()) {
        out.edge_labels.insert(out.edge_labels.end(), w.edge_labels.begin() + r,
                               w.edge_labels.end());
        out.edge_labels.insert(out.edge_labels.end(), w.edge_labels.begin(),
                               w.edge_labels.begin() + r);
    }
    return out;
}

}  // namespace pdbg
