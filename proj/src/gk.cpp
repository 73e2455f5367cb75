#include "hlpa/gk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hlpa {

namespace {

bool pair_allowed(const LetterGraph& G, const Letter& x, const Letter& y) {
    const Hypergraph& H = G.hypergraph();
    return range_vertex(H, x) == source_vertex(H, y) && !is_forbidden_pair(x, y);
}

// qq is a nod-path (q a closed letter word).
bool square_is_nod(const std::vector<Letter>& q, const LetterGraph& G) {
    size_t n = q.size();
    for (size_t k = 0; k < n; ++k)
        if (!pair_allowed(G, q[k], q[(k + 1) % n])) return false;
    return true;
}

std::vector<std::string> tokens_of(const Hypergraph& H, const std::vector<Letter>& w) {
    std::vector<std::string> t;
    for (const Letter& l : w) t.push_back(letter_token(H, l));
    return t;
}

// Token order with stars sorting after direct letters, so shift-class
// representatives start with a direct letter whenever the class has one.
std::vector<std::string> star_last_tokens(const Hypergraph& H,
                                          const std::vector<Letter>& w) {
    auto t = tokens_of(H, w);
    for (auto& s : t)
        for (auto& c : s)
            if (c == '*') c = '~';
    return t;
}

std::vector<Letter> class_representative(const Hypergraph& H,
                                         const std::vector<Letter>& p) {
    std::vector<Letter> best = p;
    auto best_tok = star_last_tokens(H, best);
    for (size_t m = 1; m < p.size(); ++m) {
        std::vector<Letter> s(p.begin() + m, p.end());
        s.insert(s.end(), p.begin(), p.begin() + m);
        auto tok = star_last_tokens(H, s);
        if (tok < best_tok) {
            best = s;
            best_tok = tok;
        }
    }
    return best;
}

}  // namespace

std::vector<QuasiCycle> enumerate_quasi_cycles(const LetterGraph& G) {
    const Hypergraph& H = G.hypergraph();
    int nv = static_cast<int>(H.vertices().size());
    std::vector<std::vector<Letter>> found;

    // For each vertex, enumerate the letter-distinct closed d-path walks.
    for (int v = 0; v < nv; ++v) {
        std::vector<Letter> walk;
        std::set<Letter> used;
        auto dfs = [&](auto&& self, int at) -> void {
            if (!walk.empty() && at == v) found.push_back(walk);
            for (const Letter& l : G.letters()) {
                if (source_vertex(H, l) != at || used.count(l)) continue;
                if (!walk.empty() && !pair_allowed(G, walk.back(), l)) continue;
                // Minimality prune: a proper suffix of walk+l that closes up
                // (wrap pair allowed) is a shorter nod^2-subword of any
                // extension, so no quasi-cycle lies beyond this branch.
                bool shortcut = false;
                for (size_t s = 1; s <= walk.size() && !shortcut; ++s) {
                    const Letter& first = s < walk.size() ? walk[s] : l;
                    shortcut = pair_allowed(G, l, first);
                }
                if (shortcut) continue;
                used.insert(l);
                walk.push_back(l);
                self(self, range_vertex(H, l));
                walk.pop_back();
                used.erase(l);
            }
        };
        dfs(dfs, v);
    }

    // Keep walks whose square is nod and which are minimal: no subword of
    // p^2 of length < |p| is a nod^2-path.
    std::vector<std::vector<Letter>> cycles;
    for (const auto& p : found) {
        if (!square_is_nod(p, G)) continue;
        size_t n = p.size();
        std::vector<Letter> pp(p);
        pp.insert(pp.end(), p.begin(), p.end());
        bool minimal = true;
        for (size_t start = 0; start < pp.size() && minimal; ++start)
            for (size_t len = 1; len < n && minimal; ++len) {
                if (start + len > pp.size()) break;
                std::vector<Letter> q(pp.begin() + start, pp.begin() + start + len);
                if (square_is_nod(q, G)) minimal = false;
            }
        if (minimal) cycles.push_back(p);
    }

    std::sort(cycles.begin(), cycles.end(),
              [&](const std::vector<Letter>& a, const std::vector<Letter>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return star_last_tokens(H, a) < star_last_tokens(H, b);
              });
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());

    std::map<std::vector<std::string>, int> class_ids;
    std::vector<QuasiCycle> out;
    for (const auto& p : cycles) {
        auto rep = star_last_tokens(H, class_representative(H, p));
        auto [it, fresh] = class_ids.emplace(rep, static_cast<int>(class_ids.size()));
        out.push_back(QuasiCycle{Word{-1, p}, it->second});
    }
    return out;
}

std::optional<Word> connects_nod(const Word& p, const Word& q, const LetterGraph& G,
                                 Budget* budget) {
    if (p.is_vertex() || q.is_vertex())
        throw DomainError("connects_nod needs nod-paths of positive length");
    const Hypergraph& H = G.hypergraph();
    int L = static_cast<int>(G.letters().size());
    int plen = static_cast<int>(p.letters.size());
    int qfirst = G.letter_index(q.letters.front());
    int pback = G.letter_index(p.letters.back());

    std::vector<int> pidx;
    for (const Letter& l : p.letters) pidx.push_back(G.letter_index(l));

    // Letters in token order so the BFS is deterministic.
    std::vector<int> order(L);
    for (int k = 0; k < L; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return letter_token(H, G.letters()[a]) < letter_token(H, G.letters()[b]);
    });

    // State: (last letter of o, matched prefix length of p; -1 = mismatched).
    // Reaching matched == |p| means p is a prefix of o: pruned.
    auto state_id = [&](int last, int matched) { return last * (plen + 1) + (matched + 1); };
    std::vector<int> parent_state(L * (plen + 1), -2);  // -2 unvisited
    std::vector<int> parent_letter(L * (plen + 1), -1);

    std::deque<std::pair<int, int>> queue;
    auto push = [&](int last, int matched, int from_state) {
        int id = state_id(last, matched);
        if (parent_state[id] != -2) return;
        parent_state[id] = from_state;
        parent_letter[id] = last;
        queue.emplace_back(last, matched);
    };

    // First letter of o: successor of p's last letter.
    for (int y : order) {
        if (!G.allowed(pback, y)) continue;
        int matched = (y == pidx[0]) ? 1 : -1;
        if (matched == plen) continue;  // o == p ... pruned
        push(y, matched, -1);
    }
    while (!queue.empty()) {
        auto [last, matched] = queue.front();
        queue.pop_front();
        if (budget) budget->tick();
        if (G.allowed(last, qfirst)) {
            std::vector<Letter> o;
            int id = state_id(last, matched);
            while (id != -1) {
                o.push_back(G.letters()[parent_letter[id]]);
                int prev = parent_state[id];
                id = prev;
            }
            std::reverse(o.begin(), o.end());
            return Word{-1, o};
        }
        for (int y : order) {
            if (!G.allowed(last, y)) continue;
            int next = (matched >= 0 && matched < plen && y == pidx[matched])
                           ? matched + 1
                           : -1;
            if (next == plen) continue;  // p would become a prefix of o
            push(y, next, state_id(last, matched));
        }
    }
    return std::nullopt;
}

bool connects(const Word& p, const Word& q, const LetterGraph& G, Budget* budget) {
    if (p.is_vertex() || q.is_vertex())
        throw DomainError("connects needs nod-paths of positive length");
    if (pair_allowed(G, p.letters.back(), q.letters.front())) return true;
    return connects_nod(p, q, G, budget).has_value();
}

std::optional<std::pair<QuasiCycle, Word>> selfconnected_witness(const LetterGraph& G,
                                                                Budget* budget) {
    for (const QuasiCycle& qc : enumerate_quasi_cycles(G)) {
        auto o = connects_nod(qc.word, qc.word, G, budget);
        if (o) return std::make_pair(qc, *o);
    }
    return std::nullopt;
}

std::pair<int, std::vector<QuasiCycle>> max_chain(const LetterGraph& G, Budget* budget) {
    if (selfconnected_witness(G, budget))
        throw DomainError("max_chain: a selfconnected quasi-cycle is present");
    auto all = enumerate_quasi_cycles(G);
    // One concrete cycle per shift class: the canonical representative.
    // Connectivity between classes is shift-invariant, so this loses nothing.
    std::vector<QuasiCycle> qcs;
    for (const auto& qc : all) {
        auto rep = class_representative(G.hypergraph(), qc.word.letters);
        if (rep == qc.word.letters) qcs.push_back(qc);
    }
    int n = static_cast<int>(qcs.size());
    if (n == 0) return {0, {}};

    std::map<std::pair<int, int>, bool> arc_memo;
    auto arc = [&](int a, int b) {
        if (qcs[a].class_id == qcs[b].class_id) return false;
        auto key = std::make_pair(a, b);
        auto it = arc_memo.find(key);
        if (it != arc_memo.end()) return it->second;
        bool v = connects(qcs[a].word, qcs[b].word, G, budget);
        arc_memo.emplace(key, v);
        return v;
    };

    // Consistency guard: with no selfconnected quasi-cycle the class digraph
    // is expected to be acyclic; a cycle would make "longest chain" suspect.
    {
        std::map<int, std::set<int>> class_arcs;
        int nclasses = 0;
        for (const auto& qc : qcs) nclasses = std::max(nclasses, qc.class_id + 1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (arc(a, b)) class_arcs[qcs[a].class_id].insert(qcs[b].class_id);
        std::vector<int> color(nclasses, 0);
        auto cyclic = [&](auto&& self, int c) -> bool {
            color[c] = 1;
            for (int d : class_arcs[c]) {
                if (color[d] == 1) return true;
                if (color[d] == 0 && self(self, d)) return true;
            }
            color[c] = 2;
            return false;
        };
        for (int c = 0; c < nclasses; ++c)
            if (color[c] == 0 && cyclic(cyclic, c))
                throw DomainError(
                    "inconsistency: quasi-cycle class digraph has a cycle but no "
                    "selfconnected quasi-cycle");
    }

    // Longest simple path over concrete quasi-cycles with distinct classes.
    std::vector<QuasiCycle> best, current;
    std::set<int> visited;
    auto dfs = [&](auto&& self, int at) -> void {
        if (current.size() > best.size()) best = current;
        for (int b = 0; b < n; ++b) {
            if (visited.count(qcs[b].class_id) || !arc(at, b)) continue;
            visited.insert(qcs[b].class_id);
            current.push_back(qcs[b]);
            self(self, b);
            current.pop_back();
            visited.erase(qcs[b].class_id);
        }
    };
    for (int a = 0; a < n; ++a) {
        visited = {qcs[a].class_id};
        current = {qcs[a]};
        dfs(dfs, a);
    }
    return {static_cast<int>(best.size()), best};
}

GkResult gk_dimension(const LetterGraph& G, Budget* budget) {
    GkResult r;
    if (auto w = selfconnected_witness(G, budget)) {
        r.kind = GkResult::Kind::Exponential;
        r.witness = *w;
        return r;
    }
    auto [d, chain] = max_chain(G, budget);
    r.kind = GkResult::Kind::Finite;
    r.dimension = d;
    r.chain = std::move(chain);
    return r;
}

}  // namespace hlpa
