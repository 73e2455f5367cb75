#include "hlpa/monoid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace hlpa {

namespace {

long long vec_total(const std::vector<long long>& v) {
    long long t = 0;
    for (long long x : v) t += x;
    return t;
}

void validate_presentation(const MonoidPresentation& P) {
    size_t n = P.generators.size();
    for (const auto& r : P.relations) {
        if (r.lhs.size() != n || r.rhs.size() != n)
            throw DomainError("relation vector length does not match generator count");
        for (long long x : r.lhs)
            if (x < 0) throw DomainError("negative multiplicity in relation");
        for (long long x : r.rhs)
            if (x < 0) throw DomainError("negative multiplicity in relation");
    }
}

}  // namespace

std::vector<Degree> window_degrees(const DegreeWindow& window) {
    if (window.bound < 0) throw DomainError("window bound must be >= 0");
    std::vector<Degree> out;
    Degree g(window.rank, -window.bound);
    if (window.rank == 0) return {Degree{}};
    while (true) {
        out.push_back(g);
        int k = window.rank - 1;
        while (k >= 0 && g[k] == window.bound) {
            g[k] = -window.bound;
            --k;
        }
        if (k < 0) break;
        ++g[k];
    }
    return out;
}

bool window_contains(const DegreeWindow& window, const Degree& g) {
    if (static_cast<int>(g.size()) != window.rank) return false;
    for (long long x : g)
        if (x < -window.bound || x > window.bound) return false;
    return true;
}

std::string graded_name(const std::string& base, const Degree& g) {
    std::string s = base + "_g";
    for (long long x : g) {
        s += '_';
        if (x < 0) {
            s += 'm';
            s += std::to_string(-x);
        } else {
            s += std::to_string(x);
        }
    }
    return s;
}

MonoidPresentation v_monoid_presentation(const Hypergraph& H) {
    MonoidPresentation P;
    P.generators = H.vertices();
    size_t n = P.generators.size();
    for (const auto& e : H.edges()) {
        MonoidPresentation::Relation r;
        r.lhs.assign(n, 0);
        r.rhs.assign(n, 0);
        for (int v : e.source) ++r.lhs[v];
        for (int v : e.range) ++r.rhs[v];
        P.relations.push_back(std::move(r));
    }
    return P;
}

Hypergraph monoid_to_hypergraph(const MonoidPresentation& P) {
    validate_presentation(P);
    std::set<std::string> taken(P.generators.begin(), P.generators.end());
    std::vector<Hypergraph::EdgeSpec> edges;
    int k = 0;
    for (const auto& r : P.relations) {
        if (vec_total(r.lhs) == 0 || vec_total(r.rhs) == 0)
            throw DomainError("relation " + std::to_string(k + 1) +
                              " has an all-zero side; the presented monoid would not "
                              "come from a hypergraph");
        std::string name = "h" + std::to_string(++k);
        while (taken.count(name)) name += '_';
        taken.insert(name);
        Hypergraph::EdgeSpec spec;
        spec.name = name;
        for (size_t j = 0; j < P.generators.size(); ++j) {
            for (long long c = 0; c < r.lhs[j]; ++c) spec.source.push_back(P.generators[j]);
            for (long long c = 0; c < r.rhs[j]; ++c) spec.range.push_back(P.generators[j]);
        }
        edges.push_back(std::move(spec));
    }
    return Hypergraph(P.generators, edges);
}

MonoidEquality monoid_equal_bounded(const MonoidPresentation& P,
                                    const std::vector<long long>& a,
                                    const std::vector<long long>& b, long long bound) {
    validate_presentation(P);
    size_t n = P.generators.size();
    if (a.size() != n || b.size() != n)
        throw DomainError("vector length does not match generator count");

    auto in_bound = [&](const std::vector<long long>& x) {
        return std::all_of(x.begin(), x.end(),
                           [&](long long v) { return v >= 0 && v <= bound; });
    };
    if (!in_bound(a) || !in_bound(b)) return {};

    // BFS over nonnegative vectors with coordinates <= bound; each move adds
    // rhs - lhs (forward) or lhs - rhs (backward) of one relation.
    std::map<std::vector<long long>, std::pair<std::vector<long long>, MonoidTraceStep>>
        parent;
    std::deque<std::vector<long long>> queue{a};
    parent[a] = {a, {}};
    auto build_trace = [&](std::vector<long long> x) {
        std::vector<MonoidTraceStep> steps;
        while (x != a) {
            auto& [prev, step] = parent.at(x);
            steps.push_back(step);
            x = prev;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    };
    if (a == b) return {MonoidEquality::Kind::Equal, {}};
    while (!queue.empty()) {
        std::vector<long long> x = queue.front();
        queue.pop_front();
        for (int r = 0; r < static_cast<int>(P.relations.size()); ++r) {
            for (bool forward : {true, false}) {
                const auto& sub = forward ? P.relations[r].lhs : P.relations[r].rhs;
                const auto& add = forward ? P.relations[r].rhs : P.relations[r].lhs;
                std::vector<long long> y = x;
                bool ok = true;
                for (size_t j = 0; j < n && ok; ++j) {
                    y[j] += add[j] - sub[j];
                    ok = x[j] >= sub[j] && y[j] <= bound;
                }
                if (!ok || parent.count(y)) continue;
                parent[y] = {x, MonoidTraceStep{r, forward}};
                if (y == b) return {MonoidEquality::Kind::Equal, build_trace(y)};
                queue.push_back(y);
            }
        }
    }
    return {};
}

std::vector<long long> replay_trace(const MonoidPresentation& P,
                                    const std::vector<long long>& a,
                                    const std::vector<MonoidTraceStep>& trace) {
    std::vector<long long> x = a;
    for (const auto& step : trace) {
        if (step.relation < 0 || step.relation >= static_cast<int>(P.relations.size()))
            throw DomainError("trace step references an unknown relation");
        const auto& rel = P.relations[step.relation];
        const auto& sub = step.forward ? rel.lhs : rel.rhs;
        const auto& add = step.forward ? rel.rhs : rel.lhs;
        for (size_t j = 0; j < x.size(); ++j) {
            x[j] -= sub[j];
            if (x[j] < 0) throw DomainError("trace step not applicable");
            x[j] += add[j];
        }
    }
    return x;
}

GroupInvariant group_completion(const MonoidPresentation& P) {
    validate_presentation(P);
    int cols = static_cast<int>(P.generators.size());
    int rows = static_cast<int>(P.relations.size());
    std::vector<std::vector<mpz_class>> A(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            A[r][c] = static_cast<long>(P.relations[r].lhs[c] - P.relations[r].rhs[c]);

    // Smith normal form by repeated pivoting; matrices here are tiny.
    int t = 0;
    int limit = std::min(rows, cols);
    std::vector<mpz_class> diag;
    while (t < limit) {
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (A[r][c] != 0 &&
                    (pr < 0 || abs(A[r][c]) < abs(A[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap(A[t], A[pr]);
        for (int r = 0; r < rows; ++r) std::swap(A[r][t], A[r][pc]);

        bool clean = true;
        for (int r = t + 1; r < rows; ++r)
            if (A[r][t] != 0) {
                mpz_class q = A[r][t] / A[t][t];
                for (int c = t; c < cols; ++c) A[r][c] -= q * A[t][c];
                if (A[r][t] != 0) clean = false;
            }
        for (int c = t + 1; c < cols; ++c)
            if (A[t][c] != 0) {
                mpz_class q = A[t][c] / A[t][t];
                for (int r = t; r < rows; ++r) A[r][c] -= q * A[r][t];
                if (A[t][c] != 0) clean = false;
            }
        if (!clean) continue;

        bool divides = true;
        for (int r = t + 1; r < rows && divides; ++r)
            for (int c = t + 1; c < cols && divides; ++c)
                if (A[r][c] % A[t][t] != 0) {
                    for (int cc = t; cc < cols; ++cc) A[t][cc] += A[r][cc];
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(abs(A[t][t]));
        ++t;
    }

    GroupInvariant inv;
    inv.free_rank = cols - static_cast<int>(diag.size());
    for (const mpz_class& d : diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

MonoidPresentation graded_monoid_presentation(const Hypergraph& H, const WeightMap& w,
                                              const DegreeWindow& window) {
    if (window.rank != w.rank()) throw DomainError("window rank does not match weight map");
    std::vector<Degree> degrees = window_degrees(window);
    MonoidPresentation P;
    std::map<std::pair<int, Degree>, int> gen_idx;
    for (const Degree& g : degrees)
        for (int v = 0; v < static_cast<int>(H.vertices().size()); ++v) {
            gen_idx[{v, g}] = static_cast<int>(P.generators.size());
            P.generators.push_back(graded_name(H.vertex_name(v), g));
        }

    size_t n = P.generators.size();
    for (const Degree& g : degrees) {
        for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
            const Hyperedge& edge = H.edges()[e];
            MonoidPresentation::Relation r;
            r.lhs.assign(n, 0);
            r.rhs.assign(n, 0);
            bool interior = true;
            for (int i = 1; i <= static_cast<int>(edge.source.size()) && interior; ++i) {
                Degree gi = degree_add(g, degree_sub(w.assign(e, i, 1), w.assign(e, 1, 1)));
                if (!window_contains(window, gi)) interior = false;
                else ++r.lhs[gen_idx.at({edge.source[i - 1], gi})];
            }
            for (int j = 1; j <= static_cast<int>(edge.range.size()) && interior; ++j) {
                Degree gj = degree_sub(g, w.assign(e, 1, j));
                if (!window_contains(window, gj)) interior = false;
                else ++r.rhs[gen_idx.at({edge.range[j - 1], gj})];
            }
            if (interior) P.relations.push_back(std::move(r));
        }
    }
    return P;
}

CoverModel covering_model(const Hypergraph& H, const WeightMap& w,
                          const DegreeWindow& window) {
    if (window.rank != w.rank()) throw DomainError("window rank does not match weight map");
    std::vector<Degree> degrees = window_degrees(window);
    std::vector<std::string> vertices;
    CoverModel model;
    for (const Degree& g : degrees)
        for (int v = 0; v < static_cast<int>(H.vertices().size()); ++v) {
            vertices.push_back(graded_name(H.vertex_name(v), g));
            model.vertex_origin.emplace_back(v, g);
        }

    std::vector<Hypergraph::EdgeSpec> specs;
    for (const Degree& g : degrees) {
        for (int e = 0; e < static_cast<int>(H.edges().size()); ++e) {
            const Hyperedge& edge = H.edges()[e];
            Hypergraph::EdgeSpec spec;
            spec.name = graded_name(edge.name, g);
            bool interior = true;
            for (int i = 1; i <= static_cast<int>(edge.source.size()) && interior; ++i) {
                Degree gi = degree_add(g, degree_sub(w.assign(e, i, 1), w.assign(e, 1, 1)));
                if (!window_contains(window, gi)) interior = false;
                else spec.source.push_back(graded_name(H.vertex_name(edge.source[i - 1]), gi));
            }
            for (int j = 1; j <= static_cast<int>(edge.range.size()) && interior; ++j) {
                Degree gj = degree_sub(g, w.assign(e, 1, j));
                if (!window_contains(window, gj)) interior = false;
                else spec.range.push_back(graded_name(H.vertex_name(edge.range[j - 1]), gj));
            }
            if (!interior) continue;
            specs.push_back(std::move(spec));
            model.edge_origin.emplace_back(e, g);
        }
    }
    model.cover = std::make_shared<Hypergraph>(vertices, specs);
    return model;
}

Hypergraph covering_hypergraph(const Hypergraph& H, const WeightMap& w,
                               const DegreeWindow& window) {
    return *covering_model(H, w, window).cover;
}

SmashElement SmashElement::monomial(const AlgebraElement& r, const Degree& g) {
    SmashElement x(r.graph(), r.field());
    x.add(g, r);
    return x;
}

void SmashElement::add(const Degree& g, const AlgebraElement& r) {
    if (r.is_zero()) return;
    auto it = comps_.find(g);
    if (it == comps_.end()) {
        comps_.emplace(g, r);
        return;
    }
    it->second = combine(Scalar::one(field_), it->second, Scalar::one(field_), r);
    if (it->second.is_zero()) comps_.erase(it);
}

std::string SmashElement::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, r] : comps_) {
        if (!first) out << " + ";
        first = false;
        out << '(' << r.str() << ") p" << degree_str(g);
    }
    return out.str();
}

SmashElement smash_add(const SmashElement& x, const SmashElement& y) {
    SmashElement z = x;
    for (const auto& [g, r] : y.components()) z.add(g, r);
    return z;
}

SmashElement smash_multiply(const SmashElement& x, const SmashElement& y,
                            const WeightMap& w, Budget* budget) {
    if (!(*x.graph() == *y.graph()) || !(x.field() == y.field()))
        throw DomainError("smash product factors over different algebras");
    SmashElement z(x.graph(), x.field());
    for (const auto& [alpha, r] : x.components())
        for (const auto& [beta, s] : y.components()) {
            AlgebraElement comp = homogeneous_component(s, w, degree_sub(alpha, beta));
            if (comp.is_zero()) continue;
            z.add(beta, multiply(r, comp, budget));
        }
    return z;
}

namespace {

struct CoverChecker {
    std::shared_ptr<const Hypergraph> H;
    const WeightMap& w;
    const CoverModel& model;
    Field field;
    Budget* budget;
    CoverReport report;

    SmashElement phi_vertex(int cv) const {
        auto [v, g] = model.vertex_origin[cv];
        return SmashElement::monomial(AlgebraElement::vertex(H, field, v), g);
    }

    // Image of the covering letter (h_g)_{ij} (or its star) in L_K(H) # Z^d.
    SmashElement phi_letter(const Letter& l) const {
        auto [e, g] = model.edge_origin[l.edge];
        Letter base{e, l.i, l.j, l.star};
        Degree at = l.star
                        ? degree_add(g, degree_sub(w.assign(e, l.i, 1), w.assign(e, 1, 1)))
                        : degree_sub(g, w.assign(e, 1, l.j));
        return SmashElement::monomial(AlgebraElement::generator(H, field, base), at);
    }

    SmashElement phi_word(const Word& word) const {
        if (word.is_vertex()) return phi_vertex(word.vertex);
        SmashElement x = phi_letter(word.letters.front());
        for (size_t k = 1; k < word.letters.size(); ++k)
            x = smash_multiply(x, phi_letter(word.letters[k]), w, budget);
        return x;
    }

    SmashElement phi(const AlgebraElement& a) const {
        SmashElement x(H, field);
        for (const auto& [word, c] : a.terms()) {
            SmashElement img = phi_word(word);
            for (const auto& [g, r] : img.components()) x.add(g, scale(c, r));
        }
        return x;
    }

    void expect(const SmashElement& got, const SmashElement& want, const std::string& what) {
        ++report.checks;
        if (!(got == want))
            report.violations.push_back(what + ": got " + got.str() + ", want " +
                                        want.str());
    }
};

}  // namespace

CoverReport verify_cover_isomorphism(std::shared_ptr<const Hypergraph> H,
                                     const WeightMap& w, const DegreeWindow& window,
                                     int trials, Field field, unsigned seed,
                                     Budget* budget) {
    CoverModel model = covering_model(*H, w, window);
    const Hypergraph& C = *model.cover;
    CoverChecker chk{H, w, model, field, budget, {}};
    SmashElement zero(H, field);

    int ncv = static_cast<int>(C.vertices().size());
    for (int u = 0; u < ncv; ++u)
        for (int v = 0; v < ncv; ++v) {
            SmashElement prod = smash_multiply(chk.phi_vertex(u), chk.phi_vertex(v), w, budget);
            chk.expect(prod, u == v ? chk.phi_vertex(u) : zero,
                       "phi(" + C.vertex_name(u) + ") phi(" + C.vertex_name(v) + ")");
        }

    for (int e = 0; e < static_cast<int>(C.edges().size()); ++e) {
        const Hyperedge& edge = C.edges()[e];
        int ns = static_cast<int>(edge.source.size());
        int nr = static_cast<int>(edge.range.size());
        for (int i = 1; i <= ns; ++i)
            for (int j = 1; j <= nr; ++j) {
                Letter d{e, i, j, false}, s{e, i, j, true};
                SmashElement pd = chk.phi_letter(d), ps = chk.phi_letter(s);
                std::string td = letter_token(C, d), ts = letter_token(C, s);
                SmashElement src = chk.phi_vertex(edge.source[i - 1]);
                SmashElement rng = chk.phi_vertex(edge.range[j - 1]);
                chk.expect(smash_multiply(src, pd, w, budget), pd, "s_i phi(" + td + ")");
                chk.expect(smash_multiply(pd, rng, w, budget), pd, "phi(" + td + ") r_j");
                chk.expect(smash_multiply(rng, ps, w, budget), ps, "r_j phi(" + ts + ")");
                chk.expect(smash_multiply(ps, src, w, budget), ps, "phi(" + ts + ") s_i");
            }
        for (int i = 1; i <= ns; ++i)
            for (int i2 = 1; i2 <= ns; ++i2) {
                SmashElement sum(H, field);
                for (int k = 1; k <= nr; ++k)
                    sum = smash_add(sum,
                                    smash_multiply(chk.phi_letter({e, i, k, false}),
                                                   chk.phi_letter({e, i2, k, true}), w,
                                                   budget));
                chk.expect(sum, i == i2 ? chk.phi_vertex(edge.source[i - 1]) : zero,
                           "sum_k phi(" + edge.name + "[" + std::to_string(i) +
                               ",k]) phi(" + edge.name + "*[" + std::to_string(i2) + ",k])");
            }
        for (int j = 1; j <= nr; ++j)
            for (int j2 = 1; j2 <= nr; ++j2) {
                SmashElement sum(H, field);
                for (int k = 1; k <= ns; ++k)
                    sum = smash_add(sum,
                                    smash_multiply(chk.phi_letter({e, k, j, true}),
                                                   chk.phi_letter({e, k, j2, false}), w,
                                                   budget));
                chk.expect(sum, j == j2 ? chk.phi_vertex(edge.range[j - 1]) : zero,
                           "sum_k phi(" + edge.name + "*[k," + std::to_string(j) +
                               "]) phi(" + edge.name + "[k," + std::to_string(j2) + "])");
            }
    }

    // Random multiplicativity trials on short generator words of the cover.
    LetterGraph G(C);
    auto cover_ptr = model.cover;
    std::mt19937 rng(seed);
    int nl = static_cast<int>(G.letters().size());
    auto random_element = [&]() {
        if (nl == 0 || rng() % 4 == 0) {
            int v = static_cast<int>(rng() % ncv);
            return AlgebraElement::vertex(cover_ptr, field, v);
        }
        std::vector<Letter> ls{G.letters()[rng() % nl]};
        int len = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(ls.size()) < len) {
            const auto& succ = G.successors(G.letter_index(ls.back()));
            if (succ.empty()) break;
            ls.push_back(G.letters()[succ[rng() % succ.size()]]);
        }
        RawWord raw;
        for (const Letter& l : ls) raw.push_back(RawTok::of_letter(l));
        return normal_form(cover_ptr, field, {{raw, Scalar::one(field)}},
                           Strategy::Leftmost, budget);
    };
    for (int t = 0; t < trials; ++t) {
        AlgebraElement a = random_element(), b = random_element();
        AlgebraElement ab = multiply(a, b, budget);
        chk.expect(smash_multiply(chk.phi(a), chk.phi(b), w, budget), chk.phi(ab),
                   "trial " + std::to_string(t) + ": phi(a)phi(b) vs phi(ab)");
    }
    return chk.report;
}

}  // namespace hlpa
