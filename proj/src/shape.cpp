#include "supergrid/shape.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace supergrid {

std::ostream& operator<<(std::ostream& os, const Coord& c) {
    return os << '(' << c.x << ',' << c.y << ')';
}

std::string to_string(Cond c) {
    switch (c) {
        case Cond::F1: return "F1";
        case Cond::F3: return "F3";
        case Cond::F4: return "F4";
        case Cond::F5: return "F5";
        case Cond::F6: return "F6";
        case Cond::F7: return "F7";
        case Cond::F8_1: return "F8_1";
        case Cond::F8_2: return "F8_2";
        case Cond::F8_3: return "F8_3";
        case Cond::F9: return "F9";
    }
    return "?";
}

namespace {
std::string joinConds(const std::vector<Cond>& conds) {
    std::string s = "no Hamiltonian structure: forbidden condition(s)";
    for (Cond c : conds) s += ' ' + to_string(c);
    return s;
}
} // namespace

ForbiddenError::ForbiddenError(std::vector<Cond> conds)
    : std::runtime_error(joinConds(conds)), conditions(std::move(conds)) {}

Shape::Shape(ShapeKind kind, int m, int n, int k, int l, int c, const Xform& f)
    : kind_(kind), m_(m), n_(n), k_(k), l_(l), c_(c), frame_(f), inv_(f.inverse()) {}

Shape Shape::rect(int m, int n) {
    if (m < 1 || n < 1) throw ShapeError("Rect requires m >= 1 and n >= 1");
    return Shape(ShapeKind::Rect, m, n, 0, 0, 0, Xform::identity());
}

Shape Shape::lshape(int m, int n, int k, int l) {
    if (m <= 1 || n <= 1) throw ShapeError("LShape requires m > 1 and n > 1");
    if (k < 1 || l < 1) throw ShapeError("LShape requires k >= 1 and l >= 1");
    if (m - k < 1) throw ShapeError("LShape requires m - k >= 1");
    if (n - l < 1) throw ShapeError("LShape requires n - l >= 1");
    return Shape(ShapeKind::LShape, m, n, k, l, 0, Xform::identity());
}

Shape Shape::cshape(int m, int n, int k, int l, int c, int d) {
    if (m < 2) throw ShapeError("CShape requires m >= 2");
    if (n < 3) throw ShapeError("CShape requires n >= 3");
    if (k < 1 || l < 1 || c < 1) throw ShapeError("CShape requires k, l, c >= 1");
    if (d != n - l - c) throw ShapeError("CShape requires d = n - l - c");
    if (d < 1) throw ShapeError("CShape requires d = n - l - c >= 1");
    if (m - k < 1) throw ShapeError("CShape requires a = m - k >= 1");
    return Shape(ShapeKind::CShape, m, n, k, l, c, Xform::identity());
}

Shape Shape::withFrame(const Xform& f) const {
    Shape s = *this;
    s.frame_ = f;
    s.inv_ = f.inverse();
    return s;
}

Shape Shape::translated(int dx, int dy) const {
    return withFrame(Xform::translate(dx, dy).then(frame_));
}

long long Shape::size() const {
    long long full = static_cast<long long>(m_) * n_;
    if (kind_ == ShapeKind::Rect) return full;
    return full - static_cast<long long>(k_) * l_;
}

bool Shape::containsLocal(Coord v) const {
    if (v.x < 1 || v.x > m_ || v.y < 1 || v.y > n_) return false;
    switch (kind_) {
        case ShapeKind::Rect: return true;
        case ShapeKind::LShape: return !(v.x > m_ - k_ && v.y <= l_);
        case ShapeKind::CShape: return !(v.x > m_ - k_ && v.y > c_ && v.y <= c_ + l_);
    }
    return false;
}

bool Shape::contains(Coord v) const { return containsLocal(inv_(v)); }

std::vector<Coord> Shape::vertices() const {
    CellRect box = boundingBox();
    std::vector<Coord> out;
    out.reserve(static_cast<size_t>(size()));
    for (int y = box.y1; y <= box.y2; ++y)
        for (int x = box.x1; x <= box.x2; ++x)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

CellRect Shape::boundingBox() const {
    Coord p = frame_({1, 1});
    Coord q = frame_({m_, n_});
    return {std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x), std::max(p.y, q.y)};
}

std::vector<Coord> Shape::neighborsOf(Coord v) const {
    if (!contains(v)) throw ShapeError("vertex " + describe() + " query outside the shape");
    std::vector<Coord> out;
    out.reserve(8);
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            Coord u{v.x + dx, v.y + dy};
            if (contains(u)) out.push_back(u);
        }
    return out;
}

int Shape::degree(Coord v) const { return static_cast<int>(neighborsOf(v).size()); }

int Shape::componentCount(const std::vector<Coord>& removed) const {
    std::unordered_set<Coord> off(removed.begin(), removed.end());
    std::unordered_set<Coord> seen;
    std::vector<Coord> verts = vertices();
    int comps = 0;
    for (const Coord& v0 : verts) {
        if (off.count(v0) || seen.count(v0)) continue;
        ++comps;
        std::queue<Coord> q;
        q.push(v0);
        seen.insert(v0);
        while (!q.empty()) {
            Coord v = q.front();
            q.pop();
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    Coord u{v.x + dx, v.y + dy};
                    if (!contains(u) || off.count(u) || seen.count(u)) continue;
                    seen.insert(u);
                    q.push(u);
                }
        }
    }
    return comps;
}

bool Shape::isCutVertex(Coord v) const {
    if (!contains(v)) throw ShapeError("cut-vertex query outside the shape");
    if (size() <= 2) return false;
    return componentCount({v}) > 1;
}

bool Shape::isVertexCutPair(Coord s, Coord t) const {
    if (!contains(s) || !contains(t)) throw ShapeError("vertex-cut query outside the shape");
    if (s == t) throw ShapeError("vertex-cut query requires distinct vertices");
    if (size() <= 3) return false;
    return componentCount({s, t}) > 1;
}

Shape Shape::classifyRegion(const CellRect& box, const std::optional<CellRect>& hole) {
    if (box.empty()) throw ShapeError("empty region");
    int M = box.width(), N = box.height();
    Xform shift = Xform::translate(box.x1 - 1, box.y1 - 1);
    if (!hole || hole->empty())
        return rect(M, N).withFrame(shift);

    CellRect h = *hole;
    if (h.x1 < box.x1 || h.x2 > box.x2 || h.y1 < box.y1 || h.y2 > box.y2)
        throw ShapeError("hole extends outside the region box");
    // local hole coordinates in 1..M x 1..N
    int hx1 = h.x1 - box.x1 + 1, hx2 = h.x2 - box.x1 + 1;
    int hy1 = h.y1 - box.y1 + 1, hy2 = h.y2 - box.y1 + 1;
    int hw = hx2 - hx1 + 1, hh = hy2 - hy1 + 1;
    bool left = hx1 == 1, right = hx2 == M, top = hy1 == 1, bottom = hy2 == N;

    auto lframe = [&](const Xform& o) { return shift.then(o); };

    if (hw == M && hh == N) throw ShapeError("hole covers the whole region");
    if (hh == N) {
        // full-height slab removed: the rest is a rectangle (or disconnected)
        if (left) return rect(M - hw, N).withFrame(Xform::translate(h.x2, box.y1 - 1));
        if (right) return rect(M - hw, N).withFrame(shift);
        throw ShapeError("full-height interior hole disconnects the region");
    }
    if (hw == M) {
        if (top) return rect(M, N - hh).withFrame(Xform::translate(box.x1 - 1, h.y2));
        if (bottom) return rect(M, N - hh).withFrame(shift);
        throw ShapeError("full-width interior hole disconnects the region");
    }
    if ((left || right) && (top || bottom)) {
        // corner block: L-shape, flipped into the upper-right corner
        Xform o = Xform::identity();
        if (left) o = o.then(Xform::flipX(M));
        if (bottom) o = o.then(Xform::flipY(N));
        return lshape(M, N, hw, hh).withFrame(lframe(o));
    }
    if (left || right) {
        // side notch with margins above and below: C-shape
        Xform o = left ? Xform::flipX(M) : Xform::identity();
        return cshape(M, N, hw, hh, hy1 - 1, N - hy2).withFrame(lframe(o));
    }
    if (top || bottom) {
        // notch on a horizontal side: the anti-transpose of a canonical
        // C(N, M; hh, hw; M-hx2, hx1-1) fills this box with the hole on top
        Xform o = Xform::antiTranspose(N, M);
        if (bottom) o = Xform::flipY(N).then(o);
        return cshape(N, M, hh, hw, M - hx2, hx1 - 1).withFrame(lframe(o));
    }
    throw ShapeError("hole does not touch the region boundary");
}

std::pair<Shape, Shape> Shape::separate(Axis axis, int line) const {
    CellRect box = boundingBox();
    CellRect first = box, second = box;
    if (axis == Axis::Vertical) {
        if (line < box.x1 || line >= box.x2)
            throw ShapeError("separation line is not strictly inside the shape");
        first.x2 = line;
        second.x1 = line + 1;
    } else {
        if (line < box.y1 || line >= box.y2)
            throw ShapeError("separation line is not strictly inside the shape");
        first.y2 = line;
        second.y1 = line + 1;
    }
    // hole of this shape in caller coordinates, if any
    std::optional<CellRect> hole;
    if (kind_ != ShapeKind::Rect) {
        CellRect lhole = kind_ == ShapeKind::LShape
                             ? CellRect{m_ - k_ + 1, 1, m_, l_}
                             : CellRect{m_ - k_ + 1, c_ + 1, m_, c_ + l_};
        Coord p = frame_({lhole.x1, lhole.y1});
        Coord q = frame_({lhole.x2, lhole.y2});
        hole = CellRect{std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x),
                        std::max(p.y, q.y)};
    }

    auto piece = [&](CellRect part) {
        std::optional<CellRect> ph;
        if (hole) {
            CellRect cut{std::max(hole->x1, part.x1), std::max(hole->y1, part.y1),
                         std::min(hole->x2, part.x2), std::min(hole->y2, part.y2)};
            if (!cut.empty()) ph = cut;
        }
        // shrink the box if the hole spans a full side slab of the piece
        Shape s = classifyRegion(part, ph);
        if (s.size() <= 0) throw ShapeError("separation produced an empty piece");
        return s;
    };
    Shape s1 = piece(first);
    Shape s2 = piece(second);
    return {s1, s2};
}

int Shape::boundaryEdgeCount() const {
    int count = 0;
    CellRect box = boundingBox();
    for (int y = box.y1; y <= box.y2; ++y)
        for (int x = box.x1; x <= box.x2; ++x) {
            if (!contains({x, y})) continue;
            // horizontal edge to the right
            if (contains({x + 1, y})) {
                bool above = contains({x, y - 1}) && contains({x + 1, y - 1});
                bool below = contains({x, y + 1}) && contains({x + 1, y + 1});
                if (!above || !below) ++count;
            }
            // vertical edge below
            if (contains({x, y + 1})) {
                bool lft = contains({x - 1, y}) && contains({x - 1, y + 1});
                bool rgt = contains({x + 1, y}) && contains({x + 1, y + 1});
                if (!lft || !rgt) ++count;
            }
        }
    return count;
}

std::string Shape::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case ShapeKind::Rect: os << "R(" << m_ << ',' << n_ << ')'; break;
        case ShapeKind::LShape: os << "L(" << m_ << ',' << n_ << ';' << k_ << ',' << l_ << ')'; break;
        case ShapeKind::CShape:
            os << "C(" << m_ << ',' << n_ << ';' << k_ << ',' << l_ << ';' << c_ << ',' << d()
               << ')';
            break;
    }
    if (frame_ != Xform::identity()) os << "@frame";
    return os.str();
}

} // namespace supergrid
