#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "supergrid/oracle.hpp"
#include "supergrid/rect.hpp"

using namespace supergrid;

namespace {

std::set<std::pair<Coord, Coord>> edgeSet(const std::vector<Coord>& seq, bool cyclic) {
    std::set<std::pair<Coord, Coord>> out;
    size_t sz = seq.size();
    size_t last = cyclic ? sz : sz - 1;
    for (size_t i = 0; i < last; ++i) {
        Coord a = seq[i], b = seq[(i + 1) % sz];
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

bool hasSideEdge(const std::vector<Coord>& seq, bool cyclic, Side side, int m, int n) {
    size_t sz = seq.size();
    size_t last = cyclic ? sz : sz - 1;
    for (size_t i = 0; i < last; ++i) {
        Coord a = seq[i], b = seq[(i + 1) % sz];
        switch (side) {
            case Side::Top:
                if (a.y == 1 && b.y == 1) return true;
                break;
            case Side::Bottom:
                if (a.y == n && b.y == n) return true;
                break;
            case Side::Left:
                if (a.x == 1 && b.x == 1) return true;
                break;
            case Side::Right:
                if (a.x == m && b.x == m) return true;
                break;
        }
    }
    return false;
}

int flatSideEdgeCount(Side side, int m, int n) {
    return (side == Side::Top || side == Side::Bottom) ? m - 1 : n - 1;
}

bool sideIsFlat(const Cycle& c, Side side, int m, int n) {
    int want = flatSideEdgeCount(side, m, n);
    int got = 0;
    size_t sz = c.v.size();
    for (size_t i = 0; i < sz; ++i) {
        Coord a = c.v[i], b = c.v[(i + 1) % sz];
        bool on = false;
        switch (side) {
            case Side::Top: on = a.y == 1 && b.y == 1; break;
            case Side::Bottom: on = a.y == n && b.y == n; break;
            case Side::Left: on = a.x == 1 && b.x == 1; break;
            case Side::Right: on = a.x == m && b.x == m; break;
        }
        if (on) ++got;
    }
    return got == want;
}

} // namespace

TEST_CASE("canonical Hamiltonian cycles of rectangles") {
    Shape r86 = Shape::rect(8, 6);
    Cycle c = hcRect(r86, Side::Top);
    CHECK(c.length() == 48);
    CHECK(isHamiltonianCycle(r86, c));
    CHECK(sideIsFlat(c, Side::Left, 8, 6));
    CHECK(sideIsFlat(c, Side::Bottom, 8, 6));
    CHECK(sideIsFlat(c, Side::Right, 8, 6));
    CHECK_FALSE(sideIsFlat(c, Side::Top, 8, 6));
    CHECK(hasSideEdge(c.v, true, Side::Top, 8, 6)); // concave, not absent

    // four distinct canonical cycles of R(7,5)
    Shape r75 = Shape::rect(7, 5);
    std::set<std::set<std::pair<Coord, Coord>>> distinct;
    for (Side side : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
        Cycle hc = hcRect(r75, side);
        CHECK(isHamiltonianCycle(r75, hc));
        for (Side other : {Side::Top, Side::Bottom, Side::Left, Side::Right})
            if (other != side) CHECK(sideIsFlat(hc, other, 7, 5));
        distinct.insert(edgeSet(hc.v, true));
    }
    CHECK(distinct.size() == 4);

    // R(2,2): the unique 4-cycle whatever the request
    CHECK(hcRect(Shape::rect(2, 2), Side::Left).length() == 4);

    CHECK_THROWS_AS(hcRect(Shape::rect(5, 1), Side::Top), ShapeError);
    // 3-row rectangles only admit concave faces on the long sides
    CHECK_THROWS_AS(hcRect(Shape::rect(5, 3), Side::Left), ShapeError);
    CHECK(isHamiltonianCycle(Shape::rect(5, 3), hcRect(Shape::rect(5, 3), Side::Top)));
}

TEST_CASE("hc cycles agree with the oracle on small rectangles") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 2; n <= 4; ++n) {
            Shape r = Shape::rect(m, n);
            CHECK(oracleHcExists(r));
            Cycle c = hcRectWithFlatSide(r, Side::Top);
            CHECK(isHamiltonianCycle(r, c));
            CHECK(sideIsFlat(c, Side::Top, m, n));
        }
}

TEST_CASE("hp_rect basics") {
    Shape r51 = Shape::rect(5, 1);
    Path p = hpRect(r51, {1, 1}, {5, 1});
    CHECK(isHamiltonianPath(r51, p, {1, 1}, {5, 1}));
    CHECK_THROWS_AS(hpRect(r51, {1, 1}, {3, 1}), ForbiddenError);

    Shape r33 = Shape::rect(3, 3);
    Path q = hpRect(r33, {1, 1}, {2, 1});
    CHECK(q.length() == 9);
    CHECK(isHamiltonianPath(r33, q, {1, 1}, {2, 1}));
}

TEST_CASE("hp_rect matches oracle existence and stays canonical") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            if (m * n > 16) continue;
            Shape r = Shape::rect(m, n);
            auto verts = r.vertices();
            for (Coord s : verts)
                for (Coord t : verts) {
                    if (s == t) continue;
                    bool f1 = rectF1(r, s, t);
                    CHECK(f1 == !oracleHpExists(r, s, t));
                    if (f1) {
                        CHECK_THROWS_AS(hpRect(r, s, t), ForbiddenError);
                        continue;
                    }
                    Path p = hpRect(r, s, t);
                    REQUIRE(isHamiltonianPath(r, p, s, t));
                    if (m >= 2 && n >= 2) {
                        for (Side side : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
                            if (hasSideEdge(p.v, false, side, m, n)) continue;
                            // a miss is only acceptable when no Hamiltonian
                            // path touches that side at all
                            bool any = false;
                            int count = flatSideEdgeCount(side, m, n);
                            for (int i = 0; i < count && !any; ++i) {
                                Edge e;
                                switch (side) {
                                    case Side::Top: e = {{i + 1, 1}, {i + 2, 1}}; break;
                                    case Side::Bottom: e = {{i + 1, n}, {i + 2, n}}; break;
                                    case Side::Left: e = {{1, i + 1}, {1, i + 2}}; break;
                                    case Side::Right: e = {{m, i + 1}, {m, i + 2}}; break;
                                }
                                if (oracleHpWithEdges(r, s, t, {e}).has_value()) any = true;
                            }
                            CHECK_FALSE(any);
                        }
                    }
                }
        }
}

TEST_CASE("hp_rect_facing honors hard side requests") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            if (m * n > 12) continue;
            Shape r = Shape::rect(m, n);
            auto verts = r.vertices();
            for (Coord s : verts)
                for (Coord t : verts) {
                    if (s == t || rectF1(r, s, t)) continue;
                    for (Side side : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
                        try {
                            Path p = hpRectFacing(r, s, t, sideMask(side));
                            CHECK(isHamiltonianPath(r, p, s, t));
                            CHECK(hasSideEdge(p.v, false, side, m, n));
                        } catch (const PathError&) {
                            // must be genuinely impossible: no single side
                            // edge admits a Hamiltonian path
                            bool any = false;
                            int count = flatSideEdgeCount(side, m, n);
                            for (int i = 0; i < count; ++i) {
                                Edge e;
                                switch (side) {
                                    case Side::Top: e = {{i + 1, 1}, {i + 2, 1}}; break;
                                    case Side::Bottom: e = {{i + 1, n}, {i + 2, n}}; break;
                                    case Side::Left: e = {{1, i + 1}, {1, i + 2}}; break;
                                    case Side::Right: e = {{m, i + 1}, {m, i + 2}}; break;
                                }
                                if (oracleHpWithEdges(r, s, t, {e}).has_value()) any = true;
                            }
                            CHECK_FALSE(any);
                        }
                    }
                }
        }
}

TEST_CASE("forced-edge paths follow the (F2) rule") {
    for (int m = 3; m <= 6; ++m)
        for (int n = 2; n <= 4; ++n) {
            if (m * n > 24) continue;
            Shape r = Shape::rect(m, n);
            auto verts = r.vertices();
            for (Coord s : verts)
                for (Coord t : verts) {
                    if (s == t || rectF1(r, s, t)) continue;
                    Path p = hpRectForcedEdge(r, s, t);
                    REQUIRE(isHamiltonianPath(r, p, s, t));
                    Edge want = rectF2(r, s, t) ? Edge{{2, 1}, {3, 1}} : Edge{{1, 1}, {2, 1}};
                    CHECK(containsEdge(p, want));
                }
        }
}

TEST_CASE("3-rectangle tail paths contain both last-column edges") {
    for (int m = 3; m <= 6; ++m) {
        Shape r = Shape::rect(m, 3);
        auto verts = r.vertices();
        for (Coord s : verts)
            for (Coord t : verts) {
                if (s == t || s.x == m || t.x == m) continue;
                Path p = hp3RectTail(r, s, t);
                REQUIRE(isHamiltonianPath(r, p, s, t));
                CHECK(containsEdge(p, Edge{{m, 1}, {m, 2}}));
                CHECK(containsEdge(p, Edge{{m, 2}, {m, 3}}));
            }
    }
    CHECK_THROWS_AS(hp3RectTail(Shape::rect(5, 3), {5, 1}, {1, 1}), ShapeError);
}

TEST_CASE("longest rectangle paths match the table and the oracle") {
    CHECK(upperBoundRect(Shape::rect(6, 1), {2, 1}, {5, 1}) == 4);
    CHECK(upperBoundRect(Shape::rect(5, 2), {3, 1}, {3, 2}) == 6);
    CHECK(upperBoundRect(Shape::rect(4, 4), {1, 1}, {4, 4}) == 16);

    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            if (m * n > 14) continue;
            Shape r = Shape::rect(m, n);
            auto verts = r.vertices();
            for (Coord s : verts)
                for (Coord t : verts) {
                    if (s == t) continue;
                    int want = oracleLongest(r, s, t).length;
                    CHECK(upperBoundRect(r, s, t) == want);
                    Path p = longestRect(r, s, t);
                    CHECK(isSimplePathInShape(r, p, s, t));
                    CHECK(p.length() == want);
                }
        }
}

TEST_CASE("solvers work in transformed frames") {
    Shape r = Shape::rect(5, 3).withFrame(Xform::antiTranspose(5, 3));
    auto verts = r.vertices();
    Coord s = verts.front(), t = verts.back();
    Path p = hpRect(r, s, t);
    CHECK(isHamiltonianPath(r, p, s, t));
    Cycle c = hcRectWithFlatSide(r, Side::Top);
    CHECK(isHamiltonianCycle(r, c));
}
