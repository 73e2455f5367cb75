#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hlpa {

/// A hyperedge: ordered source and range vertex sequences (multisets with a
/// recorded ordering; repetition encodes multiplicity). Vertices are stored
/// as indices into the owning hypergraph's vertex list.
struct Hyperedge {
    std::string name;
    std::vector<int> source;
    std::vector<int> range;

    bool operator==(const Hyperedge&) const = default;
};

/// A finite directed hypergraph. Immutable after construction; the
/// constructor validates all naming and nonemptiness invariants.
class Hypergraph {
public:
    struct EdgeSpec {
        std::string name;
        std::vector<std::string> source;
        std::vector<std::string> range;
    };

    Hypergraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    const std::string& vertex_name(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& name) const;           // -1 if absent
    int edge_index(const std::string& name) const;             // -1 if absent

    bool operator==(const Hypergraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

    std::string serialize() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Hyperedge> edges_;
    std::map<std::string, int> vertex_idx_;
    std::map<std::string, int> edge_idx_;
};

/// A generator letter h_{ij} (direct) or h*_{ij} (star) of the double graph.
/// Indices are 1-based: 1 <= i <= |source(edge)|, 1 <= j <= |range(edge)|.
struct Letter {
    int edge = 0;
    int i = 1;
    int j = 1;
    bool star = false;

    auto operator<=>(const Letter&) const = default;
};

/// Token text like "h[1,2]" or "h*[1,2]".
std::string letter_token(const Hypergraph& H, const Letter& x);

/// Vertex a letter starts at: s(h)_i for h_{ij}, r(h)_j for h*_{ij}.
int source_vertex(const Hypergraph& H, const Letter& x);
/// Vertex a letter ends at: r(h)_j for h_{ij}, s(h)_i for h*_{ij}.
int range_vertex(const Hypergraph& H, const Letter& x);

/// xy is a forbidden word: h_{i1}h*_{j1} or h*_{1i}h_{1j} over one edge.
bool is_forbidden_pair(const Letter& x, const Letter& y);

/// All generator letters of H together with the allowed-adjacency relation.
/// allowed(x, y) holds iff range_vertex(x) == source_vertex(y) and xy is not
/// forbidden; nod-paths of length >= 1 are exactly the walks of this graph.
class LetterGraph {
public:
    explicit LetterGraph(const Hypergraph& H);

    const Hypergraph& hypergraph() const { return H_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int letter_index(const Letter& x) const;

    bool allowed(const Letter& x, const Letter& y) const;
    bool allowed(int x, int y) const { return allowed_[x][y]; }

    /// Letter indices y with allowed(x, y), in canonical letter order.
    const std::vector<int>& successors(int x) const { return succ_[x]; }

private:
    Hypergraph H_;  // owned copy: keeps the graph alive for the lifetime of this object
    std::vector<Letter> letters_;
    std::map<Letter, int> index_;
    std::vector<std::vector<bool>> allowed_;
    std::vector<std::vector<int>> succ_;
};

/// Finitely separated graph: edges partitioned into groups sharing a source.
struct SeparatedGraph {
    struct Group {
        std::string name;
        std::string source;
        std::vector<std::string> ranges;  // one entry per edge of the group
    };
    std::vector<std::string> vertices;
    std::vector<Group> groups;
};

/// Row-finite vertex-weighted graph: every regular vertex carries a weight.
struct WeightedGraph {
    struct Emitter {
        std::string vertex;
        unsigned weight = 1;
        std::vector<std::string> ranges;
    };
    std::vector<std::string> vertices;
    std::vector<Emitter> emitters;
};

/// A hypergraph homomorphism given by vertex and edge maps (by name).
struct HypergraphHom {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

Hypergraph parse_hypergraph(const std::string& text);
SeparatedGraph parse_separated_graph(const std::string& text);
WeightedGraph parse_weighted_graph(const std::string& text);

Hypergraph from_separated_graph(const SeparatedGraph& G);
Hypergraph from_weighted_graph(const WeightedGraph& G);

struct HomCheck {
    bool ok = true;
    std::string violation;  // first violated equality, when !ok
};

/// Verifies s(phi(h)) = phi(s(h)) and r(phi(h)) = phi(r(h)) as multisets.
HomCheck check_homomorphism(const HypergraphHom& phi, const Hypergraph& H,
                            const Hypergraph& I);

Hypergraph subhypergraph(const Hypergraph& H, const std::vector<std::string>& vertices,
                         const std::vector<std::string>& edges);

}  // namespace hlpa
