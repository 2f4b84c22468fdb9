#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "supergrid/errors.hpp"
#include "supergrid/geometry.hpp"

namespace supergrid {

enum class ShapeKind { Rect, LShape, CShape };

enum class Axis { Vertical, Horizontal };

/// Axis-aligned cell rectangle, inclusive bounds.
struct CellRect {
    int x1 = 1, y1 = 1, x2 = 0, y2 = 0;

    bool empty() const { return x2 < x1 || y2 < y1; }
    int width() const { return x2 - x1 + 1; }
    int height() const { return y2 - y1 + 1; }
    bool contains(Coord v) const { return v.x >= x1 && v.x <= x2 && v.y >= y1 && v.y <= y2; }
    friend bool operator==(const CellRect&, const CellRect&) = default;
};

/// A rectangular, L-shaped, or C-shaped supergrid graph.
///
/// The canonical forms follow the defining conventions: R(m,n) is the full
/// m-column by n-row block; L(m,n;k,l) removes a k-by-l block from the
/// upper-right corner; C(m,n;k,l;c,d) removes a k-by-l block from the right
/// side leaving c rows above and d = n-l-c rows below the hole.
///
/// A shape additionally carries a frame transform mapping canonical local
/// coordinates to the caller's coordinates, so pieces produced by separate()
/// report their vertices in the original frame.
class Shape {
public:
    static Shape rect(int m, int n);
    static Shape lshape(int m, int n, int k, int l);
    static Shape cshape(int m, int n, int k, int l, int c, int d);

    ShapeKind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int l() const { return l_; }
    int c() const { return c_; }
    int d() const { return n_ - l_ - c_; } // C-shape bottom margin
    int a() const { return m_ - k_; }     // waist width left of the hole
    int b() const { return n_ - l_; }     // L-shape rows below the hole

    const Xform& frame() const { return frame_; }

    /// Same canonical shape with the frame replaced.
    Shape withFrame(const Xform& f) const;
    Shape translated(int dx, int dy) const;

    /// Number of vertices (mn, or mn - kl for shapes with a hole).
    long long size() const;

    /// Membership test in the caller's frame.
    bool contains(Coord v) const;

    /// All vertices in the caller's frame, sorted row-major (y, then x).
    std::vector<Coord> vertices() const;

    /// Bounding box in the caller's frame.
    CellRect boundingBox() const;

    std::vector<Coord> neighborsOf(Coord v) const;
    int degree(Coord v) const;

    bool isCutVertex(Coord v) const;
    bool isVertexCutPair(Coord s, Coord t) const;

    /// Connected-component count of the induced graph minus `removed`.
    int componentCount(const std::vector<Coord>& removed) const;

    /// Splits the shape along a grid line given in the caller's frame: a
    /// vertical separation keeps columns <= line on the first side, a
    /// horizontal one keeps rows <= line. Both sides must themselves be
    /// representable shapes.
    std::pair<Shape, Shape> separate(Axis axis, int line) const;

    /// Edges lying on the outline of the shape (the paper counts 2(m-1) +
    /// 2(n-1) of them for a rectangle).
    int boundaryEdgeCount() const;

    /// Classifies a rectangle-minus-optional-block region (in caller
    /// coordinates) as a shape whose frame reproduces the region exactly.
    /// The hole must be empty or touch the boundary of `box` as a full
    /// corner block (L) or a full side-notch with margins (C).
    static Shape classifyRegion(const CellRect& box, const std::optional<CellRect>& hole);

    std::string describe() const;

private:
    Shape(ShapeKind kind, int m, int n, int k, int l, int c, const Xform& f);

    bool containsLocal(Coord v) const;

    ShapeKind kind_;
    int m_, n_, k_, l_, c_;
    Xform frame_;
    Xform inv_;
};

} // namespace supergrid
