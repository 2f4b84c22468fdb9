#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supergrid/oracle.hpp"

using namespace supergrid;

TEST_CASE("longest path basics") {
    auto r = oracleLongest(Shape::rect(2, 2), {1, 1}, {2, 2});
    CHECK(r.length == 4); // R(2,2) is complete on 4 vertices
    CHECK(isHamiltonianPath(Shape::rect(2, 2), r.witness, {1, 1}, {2, 2}));

    CHECK(oracleLongest(Shape::rect(5, 1), {1, 1}, {3, 1}).length == 3);
    CHECK(oracleLongest(Shape::rect(6, 1), {2, 1}, {5, 1}).length == 4);
}

TEST_CASE("hp existence") {
    CHECK(oracleHpExists(Shape::rect(5, 1), {1, 1}, {5, 1}));
    CHECK_FALSE(oracleHpExists(Shape::rect(5, 1), {1, 1}, {3, 1}));
    CHECK(oracleHpExists(Shape::rect(3, 3), {1, 1}, {2, 1}));
    // n=2 with {s,t} a vertex cut
    CHECK_FALSE(oracleHpExists(Shape::rect(5, 2), {3, 1}, {3, 2}));
}

TEST_CASE("hc existence") {
    CHECK(oracleHcExists(Shape::rect(2, 2)));
    CHECK(oracleHcExists(Shape::rect(5, 3)));
    CHECK_FALSE(oracleHcExists(Shape::rect(5, 1)));
    // a=1 C-shape has a cut column
    CHECK_FALSE(oracleHcExists(Shape::cshape(3, 5, 2, 1, 2, 2)));
    // L-shape with a degree-1 vertex
    CHECK_FALSE(oracleHcExists(Shape::lshape(3, 3, 2, 2)));
    CHECK(oracleHcExists(Shape::lshape(3, 3, 1, 1)));
}

TEST_CASE("self-consistency: hp exists iff longest covers everything") {
    std::vector<Shape> shapes{Shape::rect(3, 3), Shape::rect(4, 2), Shape::lshape(4, 3, 2, 1),
                              Shape::cshape(4, 3, 1, 1, 1, 1)};
    for (const Shape& s : shapes) {
        auto verts = s.vertices();
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j) {
                if (i == j) continue;
                bool hp = oracleHpExists(s, verts[i], verts[j]);
                auto lg = oracleLongest(s, verts[i], verts[j]);
                CHECK(hp == (lg.length == s.size()));
            }
    }
}

TEST_CASE("determinism and symmetry") {
    Shape s = Shape::lshape(4, 4, 2, 2);
    auto a = oracleLongest(s, {1, 1}, {4, 4});
    auto b = oracleLongest(s, {1, 1}, {4, 4});
    CHECK(a.witness.v == b.witness.v);

    // flips preserve the length
    Shape flipped = s.withFrame(Xform::flipY(4));
    Xform f = Xform::flipY(4);
    auto c = oracleLongest(flipped, f(Coord{1, 1}), f(Coord{4, 4}));
    CHECK(c.length == a.length);
}

TEST_CASE("hp with required edges") {
    auto found = oracleHpWithEdges(Shape::rect(3, 3), {1, 1}, {1, 3},
                                   {Edge{{3, 1}, {3, 2}}, Edge{{3, 2}, {3, 3}}});
    REQUIRE(found.has_value());
    CHECK(isHamiltonianPath(Shape::rect(3, 3), *found, {1, 1}, {1, 3}));
    CHECK(containsEdge(*found, Edge{{3, 1}, {3, 2}}));
    CHECK(containsEdge(*found, Edge{{3, 2}, {3, 3}}));

    // required edge joining s and t forces a length-2 path: impossible
    CHECK_FALSE(oracleHpWithEdges(Shape::rect(3, 2), {1, 1}, {2, 1}, {Edge{{1, 1}, {2, 1}}})
                    .has_value());

    auto lemma4 = oracleHpWithEdges(Shape::rect(4, 3), {3, 2}, {4, 3}, {Edge{{1, 1}, {2, 1}}});
    CHECK(lemma4.has_value());
}

TEST_CASE("budget enforcement") {
    OracleBudget tiny;
    tiny.maxVertices = 4;
    CHECK_THROWS_AS(oracleLongest(Shape::rect(3, 3), {1, 1}, {3, 3}, tiny), BudgetError);
}
