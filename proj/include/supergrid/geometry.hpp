#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace supergrid {

/// A lattice point. Coordinates are 1-based with (1,1) at the upper-left
/// corner; x grows rightward (columns), y grows downward (rows).
struct Coord {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
inline Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }

std::ostream& operator<<(std::ostream& os, const Coord& c);

/// King-move adjacency: distinct vertices whose x and y offsets are both at
/// most 1 in absolute value.
inline bool adjacent(Coord u, Coord v) {
    if (u == v) return false;
    int dx = u.x - v.x, dy = u.y - v.y;
    return dx >= -1 && dx <= 1 && dy >= -1 && dy <= 1;
}

struct Edge {
    Coord a;
    Coord b;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Two edges are parallel when their endpoints are pairwise adjacent in
/// order: a1 ~ a2 and b1 ~ b2.
inline bool parallel(const Edge& e1, const Edge& e2) {
    return adjacent(e1.a, e2.a) && adjacent(e1.b, e2.b);
}

/// Integer affine map g(v) = R*v + t where R is one of the eight signed
/// permutation matrices of the square's dihedral group. Used to carry
/// solver results from a normalized local frame back to the caller's frame.
struct Xform {
    // row-major 2x2 matrix entries in {-1,0,1}
    int a = 1, b = 0, c = 0, d = 1;
    int tx = 0, ty = 0;

    static Xform identity() { return {}; }
    static Xform translate(int dx, int dy) { return {1, 0, 0, 1, dx, dy}; }

    /// Transpose about the main diagonal: (x, y) -> (y, x).
    static Xform transpose() { return {0, 1, 1, 0, 0, 0}; }

    /// Mirror columns of an m-wide box: x -> m+1-x.
    static Xform flipX(int m) { return {-1, 0, 0, 1, m + 1, 0}; }

    /// Mirror rows of an n-tall box: y -> n+1-y.
    static Xform flipY(int n) { return {1, 0, 0, -1, 0, n + 1}; }

    /// Anti-diagonal reflection of an m x n box: (x, y) -> (n+1-y, m+1-x).
    static Xform antiTranspose(int m, int n) { return {0, -1, -1, 0, n + 1, m + 1}; }

    Coord operator()(Coord v) const {
        return {a * v.x + b * v.y + tx, c * v.x + d * v.y + ty};
    }

    /// Composition: (this ∘ g)(v) = this(g(v)).
    Xform then(const Xform& inner) const {
        Xform r;
        r.a = a * inner.a + b * inner.c;
        r.b = a * inner.b + b * inner.d;
        r.c = c * inner.a + d * inner.c;
        r.d = c * inner.b + d * inner.d;
        r.tx = a * inner.tx + b * inner.ty + tx;
        r.ty = c * inner.tx + d * inner.ty + ty;
        return r;
    }

    Xform inverse() const {
        int det = a * d - b * c;
        if (det != 1 && det != -1) throw std::logic_error("Xform not invertible");
        Xform r;
        r.a = d * det;
        r.b = -b * det;
        r.c = -c * det;
        r.d = a * det;
        r.tx = -(r.a * tx + r.b * ty);
        r.ty = -(r.c * tx + r.d * ty);
        return r;
    }

    friend bool operator==(const Xform&, const Xform&) = default;
};

} // namespace supergrid

template <>
struct std::hash<supergrid::Coord> {
    size_t operator()(const supergrid::Coord& c) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(c.x)) << 32) |
                                          std::uint32_t(c.y));
    }
};
