#include "hlpa/element.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hlpa {

std::vector<std::string> word_tokens(const Hypergraph& H, const Word& w) {
    if (w.is_vertex()) return {H.vertex_name(w.vertex)};
    std::vector<std::string> out;
    out.reserve(w.letters.size());
    for (const Letter& l : w.letters) out.push_back(letter_token(H, l));
    return out;
}

std::string word_str(const Hypergraph& H, const Word& w) {
    std::string s;
    for (const auto& t : word_tokens(H, w)) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

bool canonical_word_less(const Hypergraph& H, const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return word_tokens(H, a) < word_tokens(H, b);
}

RawWord raw_of(const Word& w) {
    RawWord r;
    if (w.is_vertex()) {
        r.push_back(RawTok::of_vertex(w.vertex));
    } else {
        for (const Letter& l : w.letters) r.push_back(RawTok::of_letter(l));
    }
    return r;
}

AlgebraElement AlgebraElement::vertex(std::shared_ptr<const Hypergraph> H, Field f, int v) {
    AlgebraElement a(std::move(H), f);
    a.terms_.emplace(Word{v, {}}, Scalar::one(f));
    return a;
}

AlgebraElement AlgebraElement::generator(std::shared_ptr<const Hypergraph> H, Field f,
                                         Letter l) {
    AlgebraElement a(std::move(H), f);
    a.terms_.emplace(Word{-1, {l}}, Scalar::one(f));
    return a;
}

AlgebraElement AlgebraElement::unit(std::shared_ptr<const Hypergraph> H, Field f) {
    AlgebraElement a(H, f);
    for (int v = 0; v < static_cast<int>(H->vertices().size()); ++v)
        a.terms_.emplace(Word{v, {}}, Scalar::one(f));
    return a;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Word*> order;
    for (const auto& [w, c] : terms_) order.push_back(&w);
    std::sort(order.begin(), order.end(), [&](const Word* a, const Word* b) {
        return canonical_word_less(*H_, *a, *b);
    });
    std::ostringstream out;
    bool first = true;
    for (const Word* w : order) {
        Scalar c = terms_.at(*w);
        mpq_class v = c.value();
        bool neg = v < 0 && field_.p == 0;
        if (first) {
            if (neg) out << "- ";
        } else {
            out << (neg ? " - " : " + ");
        }
        mpq_class mag = neg ? mpq_class(-v) : v;
        if (mag != 1) out << mag.get_str() << " * ";
        out << word_str(*H_, *w);
        first = false;
    }
    return out.str();
}

namespace {

// One reduction step at tokens (k, k+1). Returns the replacement terms; the
// term may die (empty result), shrink, or fan out into |s(h)|-1 or |r(h)|-1
// longer-tailed terms via rules (4')/(5').
struct Redex {
    bool reducible = false;
};

bool pair_reducible(const Hypergraph& H, const RawTok& x, const RawTok& y) {
    if (x.is_vertex() || y.is_vertex()) return true;
    if (range_vertex(H, x.letter) != source_vertex(H, y.letter)) return true;
    return is_forbidden_pair(x.letter, y.letter);
}

void apply_rule(const Hypergraph& H, const RawWord& w, size_t k, const Scalar& c,
                std::vector<std::pair<RawWord, Scalar>>& out) {
    const RawTok& x = w[k];
    const RawTok& y = w[k + 1];
    auto splice = [&](const std::vector<RawTok>& repl, const Scalar& coeff) {
        RawWord nw(w.begin(), w.begin() + k);
        nw.insert(nw.end(), repl.begin(), repl.end());
        nw.insert(nw.end(), w.begin() + k + 2, w.end());
        out.emplace_back(std::move(nw), coeff);
    };
    if (x.is_vertex() && y.is_vertex()) {
        if (x.vertex == y.vertex) splice({x}, c);
        return;
    }
    if (x.is_vertex()) {
        if (x.vertex == source_vertex(H, y.letter)) splice({y}, c);
        return;
    }
    if (y.is_vertex()) {
        if (y.vertex == range_vertex(H, x.letter)) splice({x}, c);
        return;
    }
    const Letter& a = x.letter;
    const Letter& b = y.letter;
    if (range_vertex(H, a) != source_vertex(H, b)) return;  // rule (3'): product is 0
    const Hyperedge& e = H.edges()[a.edge];
    if (!a.star && b.star) {
        // (4'): h_{i1} h*_{j1} -> delta_{ij} s(h)_i - sum_{k>=2} h_{ik} h*_{jk}
        int i = a.i, j = b.i;
        if (i == j) splice({RawTok::of_vertex(e.source[i - 1])}, c);
        for (int t = 2; t <= static_cast<int>(e.range.size()); ++t)
            splice({RawTok::of_letter(Letter{a.edge, i, t, false}),
                    RawTok::of_letter(Letter{a.edge, j, t, true})},
                   -c);
    } else {
        // (5'): h*_{1i} h_{1j} -> delta_{ij} r(h)_i - sum_{k>=2} h*_{ki} h_{kj}
        int i = a.j, j = b.j;
        if (i == j) splice({RawTok::of_vertex(e.range[i - 1])}, c);
        for (int t = 2; t <= static_cast<int>(e.source.size()); ++t)
            splice({RawTok::of_letter(Letter{a.edge, t, i, true}),
                    RawTok::of_letter(Letter{a.edge, t, j, false})},
                   -c);
    }
}

void require_same_context(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(*a.graph() == *b.graph())) throw DomainError("hypergraph mismatch");
    if (!(a.field() == b.field())) throw DomainError("field mismatch");
}

}  // namespace

AlgebraElement normal_form(std::shared_ptr<const Hypergraph> H, Field field,
                           const std::vector<std::pair<RawWord, Scalar>>& raw,
                           Strategy strategy, Budget* budget) {
    const Hypergraph& graph = *H;
    AlgebraElement result(H, field);
    std::vector<std::pair<RawWord, Scalar>> work;
    for (const auto& [w, c] : raw) {
        if (w.empty()) throw DomainError("empty word");
        if (!c.is_zero()) work.emplace_back(w, c);
    }
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (budget) budget->tick();
        size_t n = w.size();
        size_t pos = n;  // n = irreducible
        if (strategy == Strategy::Leftmost) {
            for (size_t k = 0; k + 1 < n; ++k)
                if (pair_reducible(graph, w[k], w[k + 1])) {
                    pos = k;
                    break;
                }
        } else {
            for (size_t k = n - 1; k-- > 0;)
                if (pair_reducible(graph, w[k], w[k + 1])) {
                    pos = k;
                    break;
                }
        }
        if (pos == n) {
            Word key;
            if (w.size() == 1 && w[0].is_vertex()) {
                key.vertex = w[0].vertex;
            } else {
                for (const RawTok& t : w) key.letters.push_back(t.letter);
            }
            auto it = result.terms_.find(key);
            if (it == result.terms_.end()) {
                result.terms_.emplace(std::move(key), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) result.terms_.erase(it);
            }
            continue;
        }
        apply_rule(graph, w, pos, c, work);
    }
    return result;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, Budget* budget) {
    require_same_context(a, b);
    std::vector<std::pair<RawWord, Scalar>> raw;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            RawWord w = raw_of(wa);
            RawWord tail = raw_of(wb);
            w.insert(w.end(), tail.begin(), tail.end());
            raw.emplace_back(std::move(w), ca * cb);
        }
    return normal_form(a.graph(), a.field(), raw, Strategy::Leftmost, budget);
}

AlgebraElement combine(const Scalar& c1, const AlgebraElement& a, const Scalar& c2,
                       const AlgebraElement& b) {
    require_same_context(a, b);
    AlgebraElement r(a.graph(), a.field());
    auto add = [&](const Scalar& c, const AlgebraElement& x) {
        if (c.is_zero()) return;
        for (const auto& [w, coeff] : x.terms()) {
            Scalar v = c * coeff;
            auto it = r.terms_.find(w);
            if (it == r.terms_.end()) {
                if (!v.is_zero()) r.terms_.emplace(w, v);
            } else {
                it->second += v;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    };
    add(c1, a);
    add(c2, b);
    return r;
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& a) {
    return combine(c, a, Scalar::zero(a.field()), a);
}

AlgebraElement involute(const AlgebraElement& a, Budget* budget) {
    std::vector<std::pair<RawWord, Scalar>> raw;
    for (const auto& [w, c] : a.terms()) {
        RawWord rw;
        if (w.is_vertex()) {
            rw.push_back(RawTok::of_vertex(w.vertex));
        } else {
            for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                Letter l = *it;
                l.star = !l.star;
                rw.push_back(RawTok::of_letter(l));
            }
        }
        raw.emplace_back(std::move(rw), c);
    }
    return normal_form(a.graph(), a.field(), raw, Strategy::Leftmost, budget);
}

AlgebraElement apply_homomorphism(const HypergraphHom& phi, const AlgebraElement& a,
                                  std::shared_ptr<const Hypergraph> target,
                                  Budget* budget) {
    const Hypergraph& H = *a.graph();
    const Hypergraph& I = *target;
    auto check = check_homomorphism(phi, H, I);
    if (!check.ok) throw DomainError("not a hypergraph homomorphism: " + check.violation);
    std::vector<std::pair<RawWord, Scalar>> raw;
    for (const auto& [w, c] : a.terms()) {
        RawWord rw;
        if (w.is_vertex()) {
            int tv = I.vertex_index(phi.vertex_map.at(H.vertex_name(w.vertex)));
            rw.push_back(RawTok::of_vertex(tv));
        } else {
            for (Letter l : w.letters) {
                l.edge = I.edge_index(phi.edge_map.at(H.edges()[l.edge].name));
                rw.push_back(RawTok::of_letter(l));
            }
        }
        raw.emplace_back(std::move(rw), c);
    }
    return normal_form(std::move(target), a.field(), raw, Strategy::Leftmost, budget);
}

AlgebraElement local_unit_for(const std::vector<AlgebraElement>& S) {
    if (S.empty()) throw DomainError("local_unit_for needs a nonempty set");
    const auto& H = S.front().graph();
    Field f = S.front().field();
    std::set<int> verts;
    for (const auto& x : S) {
        require_same_context(S.front(), x);
        for (const auto& [w, c] : x.terms()) {
            if (w.is_vertex()) {
                verts.insert(w.vertex);
            } else {
                verts.insert(source_vertex(*H, w.letters.front()));
                verts.insert(range_vertex(*H, w.letters.back()));
            }
        }
    }
    AlgebraElement u(H, f);
    for (int v : verts) u = combine(Scalar::one(f), u, Scalar::one(f),
                                    AlgebraElement::vertex(H, f, v));
    return u;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct ExprParser {
    const std::string& text;
    size_t pos = 0;
    std::shared_ptr<const Hypergraph> H;
    Field field;
    Budget* budget;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    long parse_index() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected index");
        return std::stol(text.substr(start, pos - start));
    }

    AlgebraElement parse() {
        AlgebraElement r = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return r;
    }

    AlgebraElement parse_expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        AlgebraElement acc = parse_term();
        if (neg) acc = scale(-Scalar::one(field), acc);
        while (true) {
            skip_ws();
            if (accept('+')) {
                acc = combine(Scalar::one(field), acc, Scalar::one(field), parse_term());
            } else if (accept('-')) {
                acc = combine(Scalar::one(field), acc, -Scalar::one(field), parse_term());
            } else {
                break;
            }
        }
        return acc;
    }

    AlgebraElement parse_term() {
        Scalar coeff = Scalar::one(field);
        bool have_elem = false;
        bool any_factor = false;
        AlgebraElement elem(H, field);
        auto feed = [&](const AlgebraElement& f) {
            elem = have_elem ? multiply(elem, f, budget) : f;
            have_elem = true;
        };
        while (true) {
            skip_ws();
            if (pos >= text.size()) {
                if (!any_factor) fail("expected a factor");
                break;
            }
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_scalar();
            } else if (c == '(') {
                ++pos;
                AlgebraElement sub = parse_expr();
                expect(')');
                feed(sub);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                feed(parse_generator());
            } else {
                fail("expected a factor");
            }
            any_factor = true;
            skip_ws();
            if (!accept('*')) break;
        }
        if (!have_elem) elem = AlgebraElement::unit(H, field);
        return scale(coeff, elem);
    }

    Scalar parse_scalar() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string num = text.substr(start, pos - start);
        // "a/b" is a rational literal only when the slash is immediately
        // followed by digits (no whitespace).
        if (pos + 1 < text.size() && text[pos] == '/' &&
            std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            std::string den = text.substr(dstart, pos - dstart);
            return Scalar(field, mpq_class(num + "/" + den));
        }
        return Scalar(field, mpq_class(num));
    }

    AlgebraElement parse_generator() {
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        bool star = false;
        bool indexed = false;
        if (pos < text.size() && text[pos] == '[') {
            indexed = true;
            ++pos;
        } else if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == '[') {
            indexed = true;
            star = true;
            pos += 2;
        }
        if (!indexed) {
            int v = H->vertex_index(name);
            if (v < 0) {
                if (H->edge_index(name) >= 0)
                    fail("hyperedge '" + name + "' needs indices, e.g. " + name + "[1,1]");
                fail("unknown generator '" + name + "'");
            }
            return AlgebraElement::vertex(H, field, v);
        }
        int e = H->edge_index(name);
        if (e < 0) fail("unknown hyperedge '" + name + "'");
        long i = parse_index();
        expect(',');
        long j = parse_index();
        expect(']');
        const Hyperedge& edge = H->edges()[e];
        if (i < 1 || i > static_cast<long>(edge.source.size()))
            fail("source index " + std::to_string(i) + " out of range for '" + name + "'");
        if (j < 1 || j > static_cast<long>(edge.range.size()))
            fail("range index " + std::to_string(j) + " out of range for '" + name + "'");
        return AlgebraElement::generator(
            H, field, Letter{e, static_cast<int>(i), static_cast<int>(j), star});
    }
};

}  // namespace

AlgebraElement parse_expression(const std::string& text,
                                std::shared_ptr<const Hypergraph> H, Field field,
                                Budget* budget) {
    ExprParser p{text, 0, std::move(H), field, budget};
    return p.parse();
}

}  // namespace hlpa
