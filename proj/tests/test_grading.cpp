#include "doctest.h"

#include <random>

#include "common.hpp"
#include "hlpa/grading.hpp"

using namespace hlpa;
using namespace hlpa::testing;

TEST_CASE("standard weights") {
    auto H = ex34();
    WeightMap w = standard_weight(*H);
    CHECK(w.rank() == 2);
    CHECK(w.assign(0, 1, 2) == Degree{1, 0});
    CHECK(w.assign(0, 2, 1) == Degree{0, 1});

    WeightMap wl = standard_weight(*laurent());
    CHECK(wl.rank() == 1);
    CHECK(wl.assign(0, 1, 1) == Degree{1});

    WeightMap wg = standard_weight(*l23());
    CHECK(wg.rank() == 2);
    for (int j = 1; j <= 3; ++j) CHECK(wg.assign(0, 2, j) == Degree{0, 1});
}

TEST_CASE("double weights and admissibility") {
    WeightMap w = double_weight(*ex34());
    CHECK(w.rank() == 4);
    CHECK(w.assign(0, 1, 2) == Degree{1, 0, 0, 1});
    CHECK(double_weight(*laurent()).assign(0, 1, 1) == Degree{1, 1});

    auto G = l23();
    WeightMap wg = double_weight(*G);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) {
            Degree expect = degree_add(
                degree_sub(wg.assign(0, i, 1), wg.assign(0, 1, 1)), wg.assign(0, 1, j));
            CHECK(wg.assign(0, i, j) == expect);
        }
}

TEST_CASE("inadmissible weight maps are rejected") {
    auto H = l23();
    std::map<std::tuple<int, int, int>, Degree> assign;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) assign[{0, i, j}] = Degree{0};
    assign[{0, 2, 2}] = Degree{1};  // breaks the compatibility equation
    CHECK_THROWS_AS(WeightMap(*H, 1, assign), DomainError);
    CHECK_THROWS_AS(parse_weight_map(*H, "g 1 1 : 0\n"), DomainError);  // missing letters
}

TEST_CASE("weight map files parse") {
    auto L = laurent();
    WeightMap w = parse_weight_map(*L, "# grading\nl 1 1 : 3\n");
    CHECK(w.rank() == 1);
    CHECK(w.assign(0, 1, 1) == Degree{3});
}

TEST_CASE("homogeneous components") {
    auto H = ex34();
    Field q;
    WeightMap w = standard_weight(*H);
    auto a = parse_expression("v1 + h[1,2]", H, q);
    auto comps = homogeneous_components(a, w);
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(Degree{0, 0}).str() == "v1");
    CHECK(comps.at(Degree{1, 0}).str() == "h[1,2]");

    auto v = AlgebraElement::vertex(H, q, 2);
    CHECK(homogeneous_components(v, w).size() == 1);
    CHECK(homogeneous_component(v, w, Degree{0, 0}) == v);

    // components sum back to the element
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto x = random_element(H, q, rng);
        AlgebraElement sum(H, q);
        for (const auto& [g, c] : homogeneous_components(x, w))
            sum = combine(Scalar::one(q), sum, Scalar::one(q), c);
        CHECK(sum == x);
    }
}

TEST_CASE("products of homogeneous elements are homogeneous of summed degree") {
    Field q;
    std::mt19937 rng(9);
    for (auto H : {ex34(), laurent(), l12(), l23()}) {
        WeightMap w = standard_weight(*H);
        for (int t = 0; t < 40; ++t) {
            auto x = random_element(H, q, rng, 3, 4);
            auto y = random_element(H, q, rng, 3, 4);
            auto cx = homogeneous_components(x, w);
            auto cy = homogeneous_components(y, w);
            if (cx.empty() || cy.empty()) continue;
            auto [gx, hx] = *cx.begin();
            auto [gy, hy] = *cy.begin();
            auto prod = multiply(hx, hy);
            Degree expect = degree_add(gx, gy);
            for (const auto& [word, c] : prod.terms())
                CHECK(w.word_degree(word) == expect);
        }
    }
}
