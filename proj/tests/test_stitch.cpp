#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "supergrid/stitch.hpp"

using namespace supergrid;

namespace {
Cycle square(int x0, int y0) {
    return Cycle{{{x0, y0}, {x0 + 1, y0}, {x0 + 1, y0 + 1}, {x0, y0 + 1}}};
}

std::set<Coord> verts(const std::vector<Coord>& v) { return {v.begin(), v.end()}; }
} // namespace

TEST_CASE("merge two 4-cycles across parallel boundary edges") {
    Cycle c1 = square(1, 1);
    Cycle c2 = square(3, 1);
    ParallelEdgePair pair{{{2, 1}, {2, 2}}, {{3, 1}, {3, 2}}};
    Cycle merged = mergeCycles(c1, c2, pair);
    CHECK(merged.length() == 8);
    CHECK(isValidCycle(merged));
    std::set<Coord> all = verts(c1.v);
    all.insert(c2.v.begin(), c2.v.end());
    CHECK(verts(merged.v) == all);
    // both merge edges removed, both cross edges added
    CHECK_FALSE(containsEdge(merged, Edge{{2, 1}, {2, 2}}));
    CHECK_FALSE(containsEdge(merged, Edge{{3, 1}, {3, 2}}));
    CHECK(containsEdge(merged, Edge{{2, 1}, {3, 1}}));
    CHECK(containsEdge(merged, Edge{{2, 2}, {3, 2}}));
}

TEST_CASE("merge rejects bad input") {
    Cycle c1 = square(1, 1);
    Cycle c2 = square(3, 1);
    CHECK_THROWS_AS(mergeCycles(c1, c2, ParallelEdgePair{{{1, 1}, {2, 1}}, {{3, 1}, {3, 2}}}),
                    PathError); // not parallel
    CHECK_THROWS_AS(mergeCycles(c1, c2, ParallelEdgePair{{{2, 1}, {2, 2}}, {{4, 1}, {4, 2}}}),
                    PathError); // e2 present but pair not parallel to e1 endpoints order
}

TEST_CASE("merge cycle into path keeps endpoints") {
    Path p{{{1, 3}, {2, 3}, {3, 3}}};
    Cycle c = square(1, 1);
    ParallelEdgePair pair{{{1, 2}, {2, 2}}, {{1, 3}, {2, 3}}};
    Path merged = mergeCycleIntoPath(p, c, pair);
    CHECK(merged.length() == 7);
    CHECK(merged.start() == Coord{1, 3});
    CHECK(merged.end() == Coord{3, 3});
    CHECK(isValidPath(merged));
}

TEST_CASE("insert vertex") {
    Cycle c = square(1, 1);
    Cycle bigger = insertVertex(c, {3, 1}, Edge{{2, 1}, {2, 2}});
    CHECK(bigger.length() == 5);
    CHECK(isValidCycle(bigger));

    // two disjoint splices extend by two
    Cycle twice = insertVertex(bigger, {0, 1}, Edge{{1, 1}, {1, 2}});
    CHECK(twice.length() == 6);

    CHECK_THROWS_AS(insertVertex(c, {4, 4}, Edge{{2, 1}, {2, 2}}), PathError);
    CHECK_THROWS_AS(insertVertex(c, {3, 1}, Edge{{1, 1}, {1, 2}}), PathError);
}

TEST_CASE("absorb path into cycle") {
    Cycle c = square(1, 1);
    Path col{{{3, 1}, {3, 2}}};
    Cycle merged = absorbPath(c, col, Edge{{2, 1}, {2, 2}});
    CHECK(merged.length() == 6);
    CHECK(isValidCycle(merged));

    // single-vertex path degenerates to insert_vertex
    Cycle c2 = square(1, 1);
    Cycle merged2 = absorbPath(c2, Path{{{3, 1}}}, Edge{{2, 1}, {2, 2}});
    CHECK(merged2.length() == 5);
}

TEST_CASE("absorb path into path (tail column pattern)") {
    // host covers R(2,3) from (1,1) to (1,3) with a right-column edge
    Path host{{{1, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}}};
    REQUIRE(isValidPath(host));
    Path guest{{{3, 1}, {3, 2}, {3, 3}}};
    Path widened = absorbPath(host, guest, Edge{{2, 1}, {2, 2}});
    CHECK(widened.length() == 8);
    CHECK(widened.start() == Coord{1, 1});
    CHECK(widened.end() == Coord{1, 3});
    CHECK(isValidPath(widened));
}

TEST_CASE("concat paths") {
    Path p1{{{1, 1}}};
    Path p2{{{2, 2}}};
    Path joined = concatPaths(p1, p2);
    CHECK(joined.length() == 2);
    CHECK_THROWS_AS(concatPaths(Path{{{1, 1}}}, Path{{{3, 3}}}), PathError);
}

TEST_CASE("find parallel pair") {
    Cycle c1 = square(1, 1);
    Cycle c2 = square(3, 1);
    auto pair = findParallelPair(c1, c2);
    REQUIRE(pair.has_value());
    Cycle merged = mergeCycles(c1, c2, *pair);
    CHECK(merged.length() == 8);
}
