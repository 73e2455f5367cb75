#include "doctest.h"

#include <set>

#include "common.hpp"
#include "hlpa/basis.hpp"

using namespace hlpa;
using namespace hlpa::testing;

TEST_CASE("is_nod_path") {
    auto H = ex34();
    LetterGraph G(*H);
    CHECK(is_nod_path(Word{0, {}}, G));
    Letter h11{0, 1, 1, false}, h21s{0, 2, 1, true};
    CHECK_FALSE(is_nod_path(Word{-1, {h11, h21s}}, G));
    Letter h22{0, 2, 2, false}, h22s{0, 2, 2, true};
    CHECK(is_nod_path(Word{-1, {h22, h22s, h22}}, G));
}

TEST_CASE("nod-path enumeration on the Laurent hypergraph") {
    auto L = laurent();
    LetterGraph G(*L);
    auto groups = nod_paths_by_length(G, 2);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].size() == 1);
    CHECK(groups[1].size() == 2);
    CHECK(groups[2].size() == 2);
    std::vector<std::string> level2;
    for (const auto& w : groups[2]) level2.push_back(word_str(*L, w));
    CHECK(level2 == std::vector<std::string>{"l*[1,1] l*[1,1]", "l[1,1] l[1,1]"});
}

TEST_CASE("enumeration, trivial cases and counts") {
    auto U = make("vertices: u\n");
    LetterGraph GU(*U);
    auto g = nod_paths_by_length(GU, 5);
    for (size_t n = 0; n < g.size(); ++n) CHECK(g[n].size() == (n == 0 ? 1 : 0));

    LetterGraph G34(*ex34());
    auto g34 = nod_paths_by_length(G34, 1);
    CHECK(g34[0].size() == 4);
    CHECK(g34[1].size() == 8);
}

TEST_CASE("enumeration emits canonical order without duplicates") {
    for (auto H : {ex34(), laurent(), l12()}) {
        LetterGraph G(*H);
        std::set<std::vector<std::string>> seen;
        int last_len = 0;
        std::vector<std::string> prev;
        enumerate_nod_paths(G, 4, [&](int len, const Word& w) {
            auto toks = word_tokens(*H, w);
            CHECK(seen.insert(toks).second);
            CHECK(is_nod_path(w, G));
            if (len == last_len && !prev.empty()) CHECK(prev < toks);
            if (len != last_len) prev.clear();
            last_len = len;
            if (!prev.empty() || len >= 0) prev = toks;
        });
    }
}

TEST_CASE("growth tables match enumeration") {
    for (auto H : {ex34(), laurent(), l12(), l23(), edgeless()}) {
        LetterGraph G(*H);
        GrowthTable t = growth_table(G, 5);
        auto groups = nod_paths_by_length(G, 5);
        for (int n = 0; n <= 5; ++n)
            CHECK(t.per_length[n] == mpz_class(static_cast<long>(groups[n].size())));
    }
}

TEST_CASE("growth table shapes") {
    LetterGraph GL(*laurent());
    GrowthTable tl = growth_table(GL, 12);
    for (int n = 0; n <= 12; ++n) CHECK(tl.cumulative[n] == mpz_class(2 * n + 1));

    LetterGraph GE(*edgeless());
    GrowthTable te = growth_table(GE, 6);
    for (int n = 0; n <= 6; ++n) CHECK(te.cumulative[n] == mpz_class(2));

    LetterGraph G12(*l12());
    GrowthTable t12 = growth_table(G12, 12);
    for (int n = 2; n <= 12; ++n) {
        // at least 2^(n/2) nod-paths of length n
        mpz_class bound = 1;
        mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n / 2);
        CHECK(t12.per_length[n] >= bound);
    }
}

TEST_CASE("nod-path closure properties") {
    for (auto H : {ex34(), laurent(), l12(), l23()}) {
        LetterGraph G(*H);
        auto groups = nod_paths_by_length(G, 4);
        for (const auto& group : groups) {
            for (const Word& w : group) {
                if (w.is_vertex()) continue;
                // starring reverses and flips letters; stays nod
                Word star{-1, {}};
                for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                    Letter l = *it;
                    l.star = !l.star;
                    star.letters.push_back(l);
                }
                CHECK(is_nod_path(star, G));
                // prefixes stay nod
                Word prefix{-1, {}};
                for (size_t k = 0; k + 1 < w.letters.size(); ++k) {
                    prefix.letters.push_back(w.letters[k]);
                    CHECK(is_nod_path(prefix, G));
                }
            }
        }
        // per-length counts are star-invariant (starring is an involution)
        GrowthTable t = growth_table(G, 4);
        for (size_t n = 1; n < groups.size(); ++n) {
            size_t starred = 0;
            for (const Word& w : groups[n]) {
                Word star{-1, {}};
                for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                    Letter l = *it;
                    l.star = !l.star;
                    star.letters.push_back(l);
                }
                if (is_nod_path(star, G)) ++starred;
            }
            CHECK(starred == groups[n].size());
        }
    }
}

TEST_CASE("basis counts match the span of short products") {
    // dim of the span of all products of <= n generators equals the number
    // of nod-paths of length <= n; checked by normalizing all letter words.
    Field q;
    for (auto H : {ex34(), laurent(), l12()}) {
        LetterGraph G(*H);
        GrowthTable t = growth_table(G, 3);
        std::set<Word> span_words;
        for (int v = 0; v < static_cast<int>(H->vertices().size()); ++v)
            span_words.insert(Word{v, {}});
        int L = static_cast<int>(G.letters().size());
        std::vector<std::vector<int>> stack{{}};
        for (int n = 1; n <= 3; ++n) {
            std::vector<std::vector<int>> next;
            for (const auto& seq : stack)
                for (int x = 0; x < L; ++x) {
                    auto s = seq;
                    s.push_back(x);
                    next.push_back(s);
                }
            stack = next;
            for (const auto& seq : stack) {
                RawWord w;
                for (int x : seq) w.push_back(RawTok::of_letter(G.letters()[x]));
                auto nf = normal_form(H, q, {{w, Scalar::one(q)}});
                for (const auto& [word, c] : nf.terms()) span_words.insert(word);
            }
            mpz_class count = 0;
            for (const auto& word : span_words)
                if (static_cast<int>(word.length()) <= n) ++count;
            CHECK(count == t.cumulative[n]);
        }
    }
}
