#include "hlpa/basis.hpp"

#include <algorithm>

namespace hlpa {

bool is_nod_path(const Word& w, const LetterGraph& G) {
    if (w.is_vertex()) return true;
    const Hypergraph& H = G.hypergraph();
    for (size_t k = 0; k + 1 < w.letters.size(); ++k) {
        if (range_vertex(H, w.letters[k]) != source_vertex(H, w.letters[k + 1]))
            return false;
        if (is_forbidden_pair(w.letters[k], w.letters[k + 1])) return false;
    }
    return true;
}

void enumerate_nod_paths(const LetterGraph& G, int max_len,
                         const std::function<void(int, const Word&)>& visit) {
    const Hypergraph& H = G.hypergraph();
    for (int v = 0; v < static_cast<int>(H.vertices().size()); ++v)
        visit(0, Word{v, {}});
    if (max_len == 0) return;

    // Letters sorted by token text once; the canonical order of equal-length
    // words is then the order of the breadth-first extension.
    std::vector<int> order(G.letters().size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return letter_token(H, G.letters()[a]) < letter_token(H, G.letters()[b]);
    });

    // frontier: letter-index sequences of the current length, canonical order.
    std::vector<std::vector<int>> frontier;
    for (int k : order) {
        frontier.push_back({k});
        Word w{-1, {G.letters()[k]}};
        visit(1, w);
    }
    // Extending a canonically sorted frontier by letters in token order keeps
    // each equal-length batch in canonical order (prefix-major comparison).
    for (int len = 2; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& path : frontier) {
            for (int k : order) {
                if (!G.allowed(path.back(), k)) continue;
                auto ext = path;
                ext.push_back(k);
                Word w;
                for (int idx : ext) w.letters.push_back(G.letters()[idx]);
                visit(len, w);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
}

std::vector<std::vector<Word>> nod_paths_by_length(const LetterGraph& G, int max_len) {
    std::vector<std::vector<Word>> out(max_len + 1);
    enumerate_nod_paths(G, max_len, [&](int len, const Word& w) { out[len].push_back(w); });
    return out;
}

GrowthTable growth_table(const LetterGraph& G, int max_len) {
    const Hypergraph& H = G.hypergraph();
    GrowthTable t;
    t.per_length.push_back(mpz_class(H.vertices().size()));
    size_t n = G.letters().size();
    std::vector<mpz_class> ending(n, 1);  // paths of current length ending at letter
    for (int len = 1; len <= max_len; ++len) {
        if (len > 1) {
            std::vector<mpz_class> next(n, 0);
            for (size_t a = 0; a < n; ++a)
                for (int b : G.successors(static_cast<int>(a))) next[b] += ending[a];
            ending = std::move(next);
        }
        mpz_class total = 0;
        for (const auto& c : ending) total += c;
        t.per_length.push_back(total);
    }
    mpz_class acc = 0;
    for (const auto& c : t.per_length) {
        acc += c;
        t.cumulative.push_back(acc);
    }
    return t;
}

}  // namespace hlpa
