#include "hlpa/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hlpa/errors.hpp"

namespace hlpa {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Line-oriented tokenizer shared by the .hg/.sg/.wg readers. Strips comments
// and returns nonempty lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string w;
        if (probe >> w) out.emplace_back(no, line);
    }
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::map<std::string, int> multiset_of(const std::vector<std::string>& names) {
    std::map<std::string, int> m;
    for (const auto& n : names) ++m[n];
    return m;
}

std::string multiset_str(const std::map<std::string, int>& m) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, c] : m) {
        for (int t = 0; t < c; ++t) {
            if (!first) s += ",";
            s += k;
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        const auto& name = vertices_[v];
        if (!valid_identifier(name)) throw DomainError("invalid vertex name '" + name + "'");
        if (!vertex_idx_.emplace(name, v).second)
            throw DomainError("duplicate vertex name '" + name + "'");
    }
    if (vertices_.empty()) throw DomainError("hypergraph needs at least one vertex");
    for (const auto& spec : edges) {
        if (!valid_identifier(spec.name))
            throw DomainError("invalid hyperedge name '" + spec.name + "'");
        if (vertex_idx_.count(spec.name))
            throw DomainError("hyperedge name '" + spec.name + "' clashes with a vertex");
        if (edge_idx_.count(spec.name))
            throw DomainError("duplicate hyperedge name '" + spec.name + "'");
        if (spec.source.empty() || spec.range.empty())
            throw DomainError("hyperedge '" + spec.name + "' has an empty source or range");
        Hyperedge e;
        e.name = spec.name;
        auto resolve = [&](const std::string& vn) {
            auto it = vertex_idx_.find(vn);
            if (it == vertex_idx_.end())
                throw DomainError("undeclared vertex '" + vn + "' in hyperedge '" +
                                  spec.name + "'");
            return it->second;
        };
        for (const auto& vn : spec.source) e.source.push_back(resolve(vn));
        for (const auto& vn : spec.range) e.range.push_back(resolve(vn));
        edge_idx_.emplace(e.name, static_cast<int>(edges_.size()));
        edges_.push_back(std::move(e));
    }
}

int Hypergraph::vertex_index(const std::string& name) const {
    auto it = vertex_idx_.find(name);
    return it == vertex_idx_.end() ? -1 : it->second;
}

int Hypergraph::edge_index(const std::string& name) const {
    auto it = edge_idx_.find(name);
    return it == edge_idx_.end() ? -1 : it->second;
}

std::string Hypergraph::serialize() const {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : vertices_) out << ' ' << v;
    out << '\n';
    for (const auto& e : edges_) {
        out << "edge " << e.name << ':';
        for (int v : e.source) out << ' ' << vertices_[v];
        out << " ->";
        for (int v : e.range) out << ' ' << vertices_[v];
        out << '\n';
    }
    return out.str();
}

std::string letter_token(const Hypergraph& H, const Letter& x) {
    return H.edges()[x.edge].name + (x.star ? "*[" : "[") + std::to_string(x.i) + "," +
           std::to_string(x.j) + "]";
}

int source_vertex(const Hypergraph& H, const Letter& x) {
    const Hyperedge& e = H.edges()[x.edge];
    return x.star ? e.range[x.j - 1] : e.source[x.i - 1];
}

int range_vertex(const Hypergraph& H, const Letter& x) {
    const Hyperedge& e = H.edges()[x.edge];
    return x.star ? e.source[x.i - 1] : e.range[x.j - 1];
}

bool is_forbidden_pair(const Letter& x, const Letter& y) {
    if (x.edge != y.edge) return false;
    if (!x.star && y.star) return x.j == 1 && y.j == 1;  // h_{i1} h*_{j1}
    if (x.star && !y.star) return x.i == 1 && y.i == 1;  // h*_{1i} h_{1j}
    return false;
}

LetterGraph::LetterGraph(const Hypergraph& H) : H_(H) {
    for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
        const Hyperedge& edge = H.edges()[e];
        for (bool star : {false, true})
            for (int i = 1; i <= static_cast<int>(edge.source.size()); ++i)
                for (int j = 1; j <= static_cast<int>(edge.range.size()); ++j)
                    letters_.push_back(Letter{e, i, j, star});
    }
    for (int k = 0; k < static_cast<int>(letters_.size()); ++k) index_[letters_[k]] = k;
    int n = static_cast<int>(letters_.size());
    allowed_.assign(n, std::vector<bool>(n, false));
    succ_.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ok = range_vertex(H, letters_[a]) == source_vertex(H, letters_[b]) &&
                      !is_forbidden_pair(letters_[a], letters_[b]);
            allowed_[a][b] = ok;
            if (ok) succ_[a].push_back(b);
        }
}

int LetterGraph::letter_index(const Letter& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw DomainError("letter not in hypergraph");
    return it->second;
}

bool LetterGraph::allowed(const Letter& x, const Letter& y) const {
    return allowed_[letter_index(x)][letter_index(y)];
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<Hypergraph::EdgeSpec> edges;
    bool saw_vertices = false;
    for (const auto& [no, line] : logical_lines(text)) {
        auto words = split_words(line);
        if (words[0] == "vertices:") {
            if (saw_vertices) throw ParseError("repeated 'vertices:' line", no, 1);
            vertices.assign(words.begin() + 1, words.end());
            if (vertices.empty()) throw ParseError("empty vertex list", no, 1);
            saw_vertices = true;
        } else if (words[0] == "edge") {
            if (words.size() < 2 || words[1].back() != ':')
                throw ParseError("expected 'edge <name>: <src>+ -> <rng>+'", no, 1);
            Hypergraph::EdgeSpec spec;
            spec.name = words[1].substr(0, words[1].size() - 1);
            auto arrow = std::find(words.begin() + 2, words.end(), "->");
            if (arrow == words.end()) throw ParseError("missing '->'", no, 1);
            spec.source.assign(words.begin() + 2, arrow);
            spec.range.assign(arrow + 1, words.end());
            if (spec.source.empty() || spec.range.empty())
                throw ParseError("empty source or range in edge '" + spec.name + "'", no, 1);
            edges.push_back(std::move(spec));
        } else {
            throw ParseError("unrecognized directive '" + words[0] + "'", no, 1);
        }
    }
    if (!saw_vertices) throw ParseError("missing 'vertices:' line", 1, 1);
    return Hypergraph(std::move(vertices), edges);
}

SeparatedGraph parse_separated_graph(const std::string& text) {
    SeparatedGraph G;
    for (const auto& [no, line] : logical_lines(text)) {
        auto words = split_words(line);
        if (words[0] == "vertices:") {
            G.vertices.assign(words.begin() + 1, words.end());
        } else if (words[0] == "group") {
            // group <name> at <vertex>: <rangeVertex>+
            if (words.size() < 5 || words[2] != "at" || words[3].back() != ':')
                throw ParseError("expected 'group <name> at <vertex>: <range>+'", no, 1);
            SeparatedGraph::Group g;
            g.name = words[1];
            g.source = words[3].substr(0, words[3].size() - 1);
            g.ranges.assign(words.begin() + 4, words.end());
            G.groups.push_back(std::move(g));
        } else {
            throw ParseError("unrecognized directive '" + words[0] + "'", no, 1);
        }
    }
    return G;
}

WeightedGraph parse_weighted_graph(const std::string& text) {
    WeightedGraph G;
    for (const auto& [no, line] : logical_lines(text)) {
        auto words = split_words(line);
        if (words[0] == "vertices:") {
            G.vertices.assign(words.begin() + 1, words.end());
        } else if (words[0] == "emits") {
            // emits <vertex> weight <n>: <rangeVertex>+
            if (words.size() < 5 || words[2] != "weight" || words[3].back() != ':')
                throw ParseError("expected 'emits <vertex> weight <n>: <range>+'", no, 1);
            WeightedGraph::Emitter em;
            em.vertex = words[1];
            std::string w = words[3].substr(0, words[3].size() - 1);
            try {
                em.weight = static_cast<unsigned>(std::stoul(w));
            } catch (...) {
                throw ParseError("bad weight '" + w + "'", no, 1);
            }
            if (em.weight == 0) throw ParseError("weight must be positive", no, 1);
            em.ranges.assign(words.begin() + 4, words.end());
            if (em.ranges.empty()) throw ParseError("emitter with no edges", no, 1);
            G.emitters.push_back(std::move(em));
        } else {
            throw ParseError("unrecognized directive '" + words[0] + "'", no, 1);
        }
    }
    return G;
}

Hypergraph from_separated_graph(const SeparatedGraph& G) {
    std::vector<Hypergraph::EdgeSpec> edges;
    std::set<std::string> group_names;
    for (const auto& g : G.groups) {
        if (!group_names.insert(g.name).second)
            throw DomainError("duplicate group name '" + g.name + "'");
        if (g.ranges.empty()) throw DomainError("empty group '" + g.name + "'");
        Hypergraph::EdgeSpec spec;
        spec.name = g.name;
        spec.source = {g.source};
        spec.range = g.ranges;
        edges.push_back(std::move(spec));
    }
    return Hypergraph(G.vertices, edges);
}

Hypergraph from_weighted_graph(const WeightedGraph& G) {
    std::vector<Hypergraph::EdgeSpec> edges;
    std::set<std::string> seen;
    for (const auto& em : G.emitters) {
        if (!seen.insert(em.vertex).second)
            throw DomainError("vertex '" + em.vertex + "' emits twice");
        Hypergraph::EdgeSpec spec;
        spec.name = "h_" + em.vertex;
        spec.source.assign(em.weight, em.vertex);
        spec.range = em.ranges;
        edges.push_back(std::move(spec));
    }
    return Hypergraph(G.vertices, edges);
}

HomCheck check_homomorphism(const HypergraphHom& phi, const Hypergraph& H,
                            const Hypergraph& I) {
    auto map_vertex = [&](const std::string& v) -> std::string {
        auto it = phi.vertex_map.find(v);
        if (it == phi.vertex_map.end()) throw DomainError("vertex map not total at " + v);
        if (I.vertex_index(it->second) < 0)
            throw DomainError("vertex map image '" + it->second + "' not in target");
        return it->second;
    };
    for (const auto& v : H.vertices()) map_vertex(v);
    for (const auto& e : H.edges()) {
        auto it = phi.edge_map.find(e.name);
        if (it == phi.edge_map.end()) throw DomainError("edge map not total at " + e.name);
        int te = I.edge_index(it->second);
        if (te < 0) throw DomainError("edge map image '" + it->second + "' not in target");
        const Hyperedge& f = I.edges()[te];
        auto image = [&](const std::vector<int>& seq) {
            std::vector<std::string> out;
            for (int v : seq) out.push_back(map_vertex(H.vertex_name(v)));
            return multiset_of(out);
        };
        auto target = [&](const std::vector<int>& seq) {
            std::vector<std::string> out;
            for (int v : seq) out.push_back(I.vertex_name(v));
            return multiset_of(out);
        };
        if (image(e.source) != target(f.source)) {
            return {false, "s(phi(" + e.name + ")) = " + multiset_str(target(f.source)) +
                               " != phi(s(" + e.name + ")) = " +
                               multiset_str(image(e.source))};
        }
        if (image(e.range) != target(f.range)) {
            return {false, "r(phi(" + e.name + ")) = " + multiset_str(target(f.range)) +
                               " != phi(r(" + e.name + ")) = " + multiset_str(image(e.range))};
        }
    }
    return {};
}

Hypergraph subhypergraph(const Hypergraph& H, const std::vector<std::string>& vertices,
                         const std::vector<std::string>& edge_names) {
    std::set<std::string> vset(vertices.begin(), vertices.end());
    std::vector<std::string> verts;
    for (const auto& v : H.vertices())  // inherit H's ordering
        if (vset.count(v)) verts.push_back(v);
    if (verts.size() != vset.size()) throw DomainError("vertex subset not contained in H");
    std::set<std::string> eset(edge_names.begin(), edge_names.end());
    std::vector<Hypergraph::EdgeSpec> edges;
    for (const auto& e : H.edges()) {
        if (!eset.count(e.name)) continue;
        eset.erase(e.name);
        Hypergraph::EdgeSpec spec;
        spec.name = e.name;
        for (int v : e.source) spec.source.push_back(H.vertex_name(v));
        for (int v : e.range) spec.range.push_back(H.vertex_name(v));
        for (const auto& seq : {spec.source, spec.range})
            for (const auto& vn : seq)
                if (!vset.count(vn))
                    throw DomainError("subhypergraph not closed: edge '" + e.name +
                                      "' uses missing vertex '" + vn + "'");
        edges.push_back(std::move(spec));
    }
    if (!eset.empty())
        throw DomainError("edge subset not contained in H: '" + *eset.begin() + "'");
    return Hypergraph(std::move(verts), edges);
}

}  // namespace hlpa
