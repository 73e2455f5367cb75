#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hlpa/element.hpp"
#include "hlpa/hypergraph.hpp"
#include "hlpa/scalar.hpp"

namespace hlpa::testing {

inline std::shared_ptr<const Hypergraph> make(const std::string& text) {
    return std::make_shared<Hypergraph>(parse_hypergraph(text));
}

inline std::shared_ptr<const Hypergraph> ex34() {
    return make("vertices: v1 v2 w1 w2\nedge h: v1 v2 -> w1 w2\n");
}

inline std::shared_ptr<const Hypergraph> laurent() {
    return make("vertices: u\nedge l: u -> u\n");
}

inline std::shared_ptr<const Hypergraph> l12() {
    return make("vertices: u\nedge f: u -> u u\n");
}

inline std::shared_ptr<const Hypergraph> l23() {
    return make("vertices: u\nedge g: u u -> u u u\n");
}

inline std::shared_ptr<const Hypergraph> edgeless() {
    return make("vertices: a b\n");
}

inline std::vector<Letter> all_letters(const Hypergraph& H) {
    std::vector<Letter> out;
    for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
        const Hyperedge& edge = H.edges()[e];
        for (int i = 1; i <= static_cast<int>(edge.source.size()); ++i)
            for (int j = 1; j <= static_cast<int>(edge.range.size()); ++j) {
                out.push_back(Letter{e, i, j, false});
                out.push_back(Letter{e, i, j, true});
            }
    }
    return out;
}

// Random raw linear combination; words are arbitrary token strings (not
// necessarily d-paths), which the reduction rules must handle.
inline std::vector<std::pair<RawWord, Scalar>> random_raw(const Hypergraph& H, Field f,
                                                          std::mt19937& rng,
                                                          int max_terms = 6,
                                                          int max_len = 6) {
    auto letters = all_letters(H);
    int nv = static_cast<int>(H.vertices().size());
    std::vector<std::pair<RawWord, Scalar>> raw;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        RawWord w;
        int len = 1 + static_cast<int>(rng() % max_len);
        for (int k = 0; k < len; ++k) {
            if (letters.empty() || rng() % 4 == 0)
                w.push_back(RawTok::of_vertex(static_cast<int>(rng() % nv)));
            else
                w.push_back(RawTok::of_letter(letters[rng() % letters.size()]));
        }
        long c = static_cast<long>(rng() % 7) - 3;
        raw.emplace_back(std::move(w), Scalar(f, c));
    }
    return raw;
}

inline AlgebraElement random_element(std::shared_ptr<const Hypergraph> H, Field f,
                                     std::mt19937& rng, int max_terms = 6,
                                     int max_len = 6) {
    return normal_form(H, f, random_raw(*H, f, rng, max_terms, max_len));
}

}  // namespace hlpa::testing
