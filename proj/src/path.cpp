#include "supergrid/path.hpp"

#include <algorithm>
#include <unordered_set>

namespace supergrid {

namespace {
bool allDistinct(const std::vector<Coord>& v) {
    std::unordered_set<Coord> seen;
    for (const Coord& c : v)
        if (!seen.insert(c).second) return false;
    return true;
}

bool consecutiveAdjacent(const std::vector<Coord>& v, bool cyclic) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (!adjacent(v[i], v[i + 1])) return false;
    if (cyclic && v.size() >= 2 && !adjacent(v.back(), v.front())) return false;
    return true;
}
} // namespace

bool isValidPath(const Path& p) {
    if (p.v.empty()) return false;
    return allDistinct(p.v) && consecutiveAdjacent(p.v, false);
}

bool isValidCycle(const Cycle& c) {
    if (c.v.size() < 3) return false;
    return allDistinct(c.v) && consecutiveAdjacent(c.v, true);
}

void validate(const Path& p) {
    if (!isValidPath(p)) throw PathError("constructed sequence is not a simple path");
}

void validate(const Cycle& c) {
    if (!isValidCycle(c)) throw PathError("constructed sequence is not a simple cycle");
}

int findEdge(const std::vector<Coord>& seq, const Edge& e, bool cyclic) {
    size_t n = seq.size();
    size_t last = cyclic ? n : n - 1;
    for (size_t i = 0; i < last; ++i) {
        const Coord& u = seq[i];
        const Coord& w = seq[(i + 1) % n];
        if ((u == e.a && w == e.b) || (u == e.b && w == e.a)) return static_cast<int>(i);
    }
    return -1;
}

bool containsEdge(const Path& p, const Edge& e) { return findEdge(p.v, e, false) >= 0; }
bool containsEdge(const Cycle& c, const Edge& e) { return findEdge(c.v, e, true) >= 0; }

Path reversed(Path p) {
    std::reverse(p.v.begin(), p.v.end());
    return p;
}

bool isSimplePathInShape(const Shape& shape, const Path& p, Coord s, Coord t) {
    if (!isValidPath(p)) return false;
    if (p.start() != s || p.end() != t) return false;
    return std::all_of(p.v.begin(), p.v.end(), [&](Coord v) { return shape.contains(v); });
}

bool isHamiltonianPath(const Shape& shape, const Path& p, Coord s, Coord t) {
    return isSimplePathInShape(shape, p, s, t) &&
           static_cast<long long>(p.v.size()) == shape.size();
}

bool isHamiltonianCycle(const Shape& shape, const Cycle& c) {
    if (!isValidCycle(c)) return false;
    if (static_cast<long long>(c.v.size()) != shape.size()) return false;
    return std::all_of(c.v.begin(), c.v.end(), [&](Coord v) { return shape.contains(v); });
}

Path mapped(const Xform& f, Path p) {
    for (Coord& v : p.v) v = f(v);
    return p;
}

Cycle mapped(const Xform& f, Cycle c) {
    for (Coord& v : c.v) v = f(v);
    return c;
}

} // namespace supergrid
