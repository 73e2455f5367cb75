#include "doctest.h"

#include "common.hpp"
#include "hlpa/hypergraph.hpp"

using namespace hlpa;
using namespace hlpa::testing;

TEST_CASE("parsing the two-hyperedge example") {
    auto H = ex34();
    CHECK(H->vertices() == std::vector<std::string>{"v1", "v2", "w1", "w2"});
    REQUIRE(H->edges().size() == 1);
    CHECK(H->edges()[0].name == "h");
    CHECK(H->edges()[0].source == std::vector<int>{0, 1});
    CHECK(H->edges()[0].range == std::vector<int>{2, 3});
}

TEST_CASE("parsing edgeless and multiplicity cases") {
    auto U = make("vertices: u\n");
    CHECK(U->edges().empty());
    auto G = l23();
    CHECK(G->edges()[0].source == std::vector<int>{0, 0});
    CHECK(G->edges()[0].range == std::vector<int>{0, 0, 0});
}

TEST_CASE("parse errors carry positions and reasons") {
    CHECK_THROWS_AS(parse_hypergraph("vertices: a a\n"), DomainError);
    CHECK_THROWS_AS(parse_hypergraph("vertices: a\nedge e: a -> b\n"), DomainError);
    CHECK_THROWS_AS(parse_hypergraph("vertices: a\nedge e: -> a\n"), DomainError);
    CHECK_THROWS_AS(parse_hypergraph("vertices: a\nedge a: a -> a\n"), DomainError);
    CHECK_THROWS_AS(parse_hypergraph("nonsense\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("vertices: 1bad\n"), DomainError);
}

TEST_CASE("serialize round-trips") {
    for (auto H : {ex34(), laurent(), l12(), l23(), edgeless()}) {
        Hypergraph back = parse_hypergraph(H->serialize());
        CHECK(back == *H);
    }
}

TEST_CASE("letter graph forbidden pairs on the two-hyperedge example") {
    auto H = ex34();
    LetterGraph G(*H);
    Letter h11{0, 1, 1, false}, h12{0, 1, 2, false};
    Letter h21s{0, 2, 1, true}, h22s{0, 2, 2, true};
    CHECK_FALSE(G.allowed(h11, h21s));  // both end/start through the first range slot
    CHECK(G.allowed(h12, h22s));        // second range slot: no rule applies
    CHECK_FALSE(G.allowed(h11, h22s));  // endpoints w1 vs w2 do not match
}

TEST_CASE("letter graph of L(1,2) against a hand oracle") {
    auto H = l12();
    LetterGraph G(*H);
    Letter f11{0, 1, 1, false}, f12{0, 1, 2, false};
    Letter f11s{0, 1, 1, true}, f12s{0, 1, 2, true};
    CHECK(G.allowed(f11, f12));
    CHECK_FALSE(G.allowed(f11s, f12));  // h*_{1i} h_{1j} is forbidden
    CHECK_FALSE(G.allowed(f11, f11s));  // h_{i1} h*_{j1} is forbidden
    CHECK(G.allowed(f11, f12s));
    CHECK(G.allowed(f12, f11s));
    CHECK_FALSE(G.allowed(f12s, f11));  // single source slot: every star-direct pair is forbidden
    // every allowed pair is a d-path step
    int n = static_cast<int>(G.letters().size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (G.allowed(x, y))
                CHECK(range_vertex(*H, G.letters()[x]) ==
                      source_vertex(*H, G.letters()[y]));
}

TEST_CASE("edgeless letter graph is empty") {
    LetterGraph G(*edgeless());
    CHECK(G.letters().empty());
}

TEST_CASE("separated graph conversion") {
    SeparatedGraph::Group X{"hX", "v", {"v"}};
    Hypergraph H1 = from_separated_graph({{"v"}, {X}});
    CHECK(H1 == parse_hypergraph("vertices: v\nedge hX: v -> v\n"));

    SeparatedGraph::Group loops{"f", "v", {"v", "v", "v"}};
    Hypergraph H2 = from_separated_graph({{"v"}, {loops}});
    CHECK(H2.edges()[0].source == std::vector<int>{0});
    CHECK(H2.edges()[0].range == std::vector<int>{0, 0, 0});

    SeparatedGraph two{{"v"}, {{"a", "v", {"v"}}, {"b", "v", {"v", "v"}}}};
    Hypergraph H3 = from_separated_graph(two);
    CHECK(H3.edges().size() == 2);
    CHECK(H3.edges()[0].source == H3.edges()[1].source);
}

TEST_CASE("weighted graph conversion") {
    WeightedGraph::Emitter em{"u", 2, {"u", "u", "u"}};
    Hypergraph H = from_weighted_graph({{"u"}, {em}});
    CHECK(H.edges()[0].source == std::vector<int>{0, 0});
    CHECK(H.edges()[0].range == std::vector<int>{0, 0, 0});

    WeightedGraph::Emitter w1{"a", 1, {"b"}};
    Hypergraph H2 = from_weighted_graph({{"a", "b"}, {w1}});
    for (const auto& e : H2.edges()) CHECK(e.source.size() == 1);

    Hypergraph H3 = from_weighted_graph({{"a", "b"}, {w1}});
    CHECK(H3.edges().size() == 1);  // b emits nothing, gets no hyperedge
}

TEST_CASE("separated and weighted file formats parse") {
    SeparatedGraph sg = parse_separated_graph("vertices: u\ngroup f at u: u u\n");
    CHECK(from_separated_graph(sg) == *l12());
    WeightedGraph wg = parse_weighted_graph("vertices: u\nemits u weight 2: u u u\n");
    Hypergraph H = from_weighted_graph(wg);
    CHECK(H.edges()[0].source.size() == 2);
    CHECK(H.edges()[0].range.size() == 3);
}

TEST_CASE("homomorphism checking") {
    auto H = ex34();
    HypergraphHom id{{{"v1", "v1"}, {"v2", "v2"}, {"w1", "w1"}, {"w2", "w2"}},
                     {{"h", "h"}}};
    CHECK(check_homomorphism(id, *H, *H).ok);

    auto cyc = make("vertices: u1 u2\nedge l1: u1 -> u2\nedge l2: u2 -> u1\n");
    auto L = laurent();
    HypergraphHom fold{{{"u1", "u"}, {"u2", "u"}}, {{"l1", "l"}, {"l2", "l"}}};
    CHECK(check_homomorphism(fold, *cyc, *L).ok);

    HypergraphHom bad{{{"u", "u"}}, {{"l", "f"}}};
    auto res = check_homomorphism(bad, *L, *l12());
    CHECK_FALSE(res.ok);
    CHECK(!res.violation.empty());
}

TEST_CASE("homomorphisms compose") {
    auto cyc = make("vertices: u1 u2\nedge l1: u1 -> u2\nedge l2: u2 -> u1\n");
    auto L = laurent();
    HypergraphHom fold{{{"u1", "u"}, {"u2", "u"}}, {{"l1", "l"}, {"l2", "l"}}};
    HypergraphHom idL{{{"u", "u"}}, {{"l", "l"}}};
    HypergraphHom comp;
    for (const auto& [a, b] : fold.vertex_map) comp.vertex_map[a] = idL.vertex_map.at(b);
    for (const auto& [a, b] : fold.edge_map) comp.edge_map[a] = idL.edge_map.at(b);
    CHECK(check_homomorphism(comp, *cyc, *L).ok);
}

TEST_CASE("subhypergraphs") {
    auto H = ex34();
    CHECK(subhypergraph(*H, {"v1", "v2", "w1", "w2"}, {"h"}) == *H);
    Hypergraph single = subhypergraph(*H, {"v1"}, {});
    CHECK(single.vertices() == std::vector<std::string>{"v1"});
    CHECK(single.edges().empty());
    CHECK_THROWS_WITH_AS(subhypergraph(*H, {"v1", "v2"}, {"h"}) , // closure violation
                         doctest::Contains("w1"), DomainError);
}
