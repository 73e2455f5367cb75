#include "hlpa/grading.hpp"

#include <algorithm>
#include <sstream>

#include "hlpa/errors.hpp"

namespace hlpa {

Degree degree_zero(int rank) { return Degree(rank, 0); }

Degree degree_add(const Degree& a, const Degree& b) {
    Degree r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Degree degree_sub(const Degree& a, const Degree& b) {
    Degree r = a;
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Degree degree_neg(const Degree& a) {
    Degree r = a;
    for (auto& x : r) x = -x;
    return r;
}

std::string degree_str(const Degree& g) {
    std::ostringstream out;
    out << '(';
    for (size_t k = 0; k < g.size(); ++k) {
        if (k) out << ',';
        out << g[k];
    }
    out << ')';
    return out.str();
}

WeightMap::WeightMap(const Hypergraph& H, int rank,
                     std::map<std::tuple<int, int, int>, Degree> assign)
    : rank_(rank), assign_(std::move(assign)) {
    for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
        const Hyperedge& edge = H.edges()[e];
        int ns = static_cast<int>(edge.source.size());
        int nr = static_cast<int>(edge.range.size());
        for (int i = 1; i <= ns; ++i)
            for (int j = 1; j <= nr; ++j) {
                auto it = assign_.find({e, i, j});
                if (it == assign_.end())
                    throw DomainError("weight map misses letter " +
                                      letter_token(H, Letter{e, i, j, false}));
                if (static_cast<int>(it->second.size()) != rank_)
                    throw DomainError("weight vector rank mismatch at " +
                                      letter_token(H, Letter{e, i, j, false}));
                Degree expect = degree_add(degree_sub(assign_.at({e, i, 1}),
                                                      assign_.at({e, 1, 1})),
                                           assign_.at({e, 1, j}));
                if (it->second != expect)
                    throw DomainError("weight map not admissible at " +
                                      letter_token(H, Letter{e, i, j, false}));
            }
    }
}

const Degree& WeightMap::assign(int edge, int i, int j) const {
    return assign_.at({edge, i, j});
}

Degree WeightMap::letter_degree(const Letter& l) const {
    const Degree& d = assign_.at({l.edge, l.i, l.j});
    return l.star ? degree_neg(d) : d;
}

Degree WeightMap::word_degree(const Word& w) const {
    Degree g = degree_zero(rank_);
    for (const Letter& l : w.letters) g = degree_add(g, letter_degree(l));
    return g;
}

WeightMap standard_weight(const Hypergraph& H) {
    int d = 0;
    for (const auto& e : H.edges()) d = std::max(d, static_cast<int>(e.source.size()));
    std::map<std::tuple<int, int, int>, Degree> assign;
    for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
        const Hyperedge& edge = H.edges()[e];
        for (int i = 1; i <= static_cast<int>(edge.source.size()); ++i)
            for (int j = 1; j <= static_cast<int>(edge.range.size()); ++j) {
                Degree g = degree_zero(d);
                g[i - 1] = 1;
                assign[{e, i, j}] = g;
            }
    }
    return WeightMap(H, d, std::move(assign));
}

WeightMap double_weight(const Hypergraph& H) {
    int m = 0, n = 0;
    for (const auto& e : H.edges()) {
        m = std::max(m, static_cast<int>(e.source.size()));
        n = std::max(n, static_cast<int>(e.range.size()));
    }
    std::map<std::tuple<int, int, int>, Degree> assign;
    for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
        const Hyperedge& edge = H.edges()[e];
        for (int i = 1; i <= static_cast<int>(edge.source.size()); ++i)
            for (int j = 1; j <= static_cast<int>(edge.range.size()); ++j) {
                Degree g = degree_zero(m + n);
                g[i - 1] = 1;
                g[m + j - 1] = 1;
                assign[{e, i, j}] = g;
            }
    }
    return WeightMap(H, m + n, std::move(assign));
}

WeightMap parse_weight_map(const Hypergraph& H, const std::string& text) {
    std::map<std::tuple<int, int, int>, Degree> assign;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    int rank = -1;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string edge_name;
        if (!(ls >> edge_name)) continue;
        int e = H.edge_index(edge_name);
        if (e < 0) throw ParseError("unknown hyperedge '" + edge_name + "'", no, 1);
        int i, j;
        std::string colon;
        if (!(ls >> i >> j >> colon) || colon != ":")
            throw ParseError("expected 'EDGE i j : integers'", no, 1);
        Degree g;
        long long x;
        while (ls >> x) g.push_back(x);
        if (rank < 0) rank = static_cast<int>(g.size());
        if (static_cast<int>(g.size()) != rank)
            throw ParseError("inconsistent weight vector length", no, 1);
        assign[{e, i, j}] = std::move(g);
    }
    if (rank < 0) rank = 0;
    return WeightMap(H, rank, std::move(assign));
}

std::map<Degree, AlgebraElement> homogeneous_components(const AlgebraElement& a,
                                                        const WeightMap& w) {
    std::map<Degree, AlgebraElement> comps;
    for (const auto& [word, c] : a.terms()) {
        Degree g = w.word_degree(word);
        auto it = comps.find(g);
        if (it == comps.end())
            it = comps.emplace(g, AlgebraElement(a.graph(), a.field())).first;
        AlgebraElement term(a.graph(), a.field());
        std::vector<std::pair<RawWord, Scalar>> raw{{raw_of(word), c}};
        it->second = combine(Scalar::one(a.field()), it->second, Scalar::one(a.field()),
                             normal_form(a.graph(), a.field(), raw));
    }
    return comps;
}

AlgebraElement homogeneous_component(const AlgebraElement& a, const WeightMap& w,
                                     const Degree& g) {
    auto comps = homogeneous_components(a, w);
    auto it = comps.find(g);
    if (it != comps.end()) return it->second;
    return AlgebraElement(a.graph(), a.field());
}

}  // namespace hlpa
