#include "supergrid/stitch.hpp"

#include <algorithm>

namespace supergrid {

namespace {

void requireParallel(const ParallelEdgePair& pair) {
    if (!adjacent(pair.e1.a, pair.e1.b) || !adjacent(pair.e2.a, pair.e2.b))
        throw PathError("parallel pair members are not edges");
    if (!parallel(pair.e1, pair.e2))
        throw PathError("edges are not parallel");
}

/// The cycle read from the successor of position i around to position i,
/// i.e. with the edge at position i as the missing wrap edge.
std::vector<Coord> openedAt(const std::vector<Coord>& cyc, int i) {
    size_t n = cyc.size();
    std::vector<Coord> out;
    out.reserve(n);
    for (size_t k = 1; k <= n; ++k) out.push_back(cyc[(i + k) % n]);
    return out;
}

/// Walk of the whole cycle from `entry` to `exit` that does not use the
/// edge at position i (whose endpoints are exactly {entry, exit}).
std::vector<Coord> cycleSpan(const std::vector<Coord>& cyc, int i, Coord entry) {
    std::vector<Coord> piece = openedAt(cyc, i); // runs successor(i) .. cyc[i]
    if (piece.front() != entry) std::reverse(piece.begin(), piece.end());
    if (piece.front() != entry) throw PathError("merge edge does not match stated endpoints");
    return piece;
}

#ifndef NDEBUG
constexpr bool kValidateStitches = true;
#else
constexpr bool kValidateStitches = false;
#endif

} // namespace

Cycle mergeCycles(const Cycle& c1, const Cycle& c2, const ParallelEdgePair& pair) {
    requireParallel(pair);
    int i1 = findEdge(c1.v, pair.e1, true);
    int i2 = findEdge(c2.v, pair.e2, true);
    if (i1 < 0) throw PathError("e1 is not an edge of the first cycle");
    if (i2 < 0) throw PathError("e2 is not an edge of the second cycle");

    Coord u = c1.v[i1];
    std::vector<Coord> out = openedAt(c1.v, i1); // ends at u, keeps c1 orientation
    Coord entry = (u == pair.e1.a) ? pair.e2.a : pair.e2.b;
    std::vector<Coord> span = cycleSpan(c2.v, i2, entry);
    out.insert(out.end(), span.begin(), span.end());

    Cycle result{std::move(out)};
    if (kValidateStitches) validate(result);
    return result;
}

Path mergeCycleIntoPath(const Path& p, const Cycle& c, const ParallelEdgePair& pair) {
    requireParallel(pair);
    int ic = findEdge(c.v, pair.e1, true);
    int ip = findEdge(p.v, pair.e2, false);
    if (ic < 0) throw PathError("e1 is not an edge of the cycle");
    if (ip < 0) throw PathError("e2 is not an edge of the path");

    Coord alpha = p.v[ip];
    Coord entry = (alpha == pair.e2.a) ? pair.e1.a : pair.e1.b;
    std::vector<Coord> span = cycleSpan(c.v, ic, entry);

    std::vector<Coord> out;
    out.reserve(p.v.size() + c.v.size());
    out.insert(out.end(), p.v.begin(), p.v.begin() + ip + 1);
    out.insert(out.end(), span.begin(), span.end());
    out.insert(out.end(), p.v.begin() + ip + 1, p.v.end());

    Path result{std::move(out)};
    if (kValidateStitches) validate(result);
    if (result.start() != p.start() || result.end() != p.end())
        throw PathError("merge changed the path endpoints");
    return result;
}

namespace {
template <typename Seq>
Seq spliceVertex(const Seq& target, Coord x, const Edge& edge, bool cyclic) {
    if (!adjacent(x, edge.a) || !adjacent(x, edge.b))
        throw PathError("vertex does not adjoin the edge");
    int i = findEdge(target.v, edge, cyclic);
    if (i < 0) throw PathError("edge is not on the target");
    Seq out = target;
    out.v.insert(out.v.begin() + i + 1, x);
    if (kValidateStitches) validate(out);
    return out;
}
} // namespace

Cycle insertVertex(const Cycle& target, Coord x, const Edge& edge) {
    return spliceVertex(target, x, edge, true);
}

Path insertVertex(const Path& target, Coord x, const Edge& edge) {
    return spliceVertex(target, x, edge, false);
}

namespace {
template <typename Seq>
Seq spliceGuest(const Seq& host, const Path& guest, const Edge& edge, bool cyclic) {
    if (guest.v.empty()) throw PathError("cannot absorb an empty path");
    int i = findEdge(host.v, edge, cyclic);
    if (i < 0) throw PathError("edge is not on the host");
    Coord alpha = host.v[i];
    std::vector<Coord> g = guest.v;
    bool forward = alpha == edge.a;
    // host traversal alpha -> beta; guest runs between them
    if (!forward) std::reverse(g.begin(), g.end());
    if (!adjacent(alpha, g.front()))
        throw PathError("host edge endpoint not adjacent to the path start");
    Coord beta = host.v[(i + 1) % host.v.size()];
    if (!adjacent(g.back(), beta))
        throw PathError("host edge endpoint not adjacent to the path end");
    Seq out = host;
    out.v.insert(out.v.begin() + i + 1, g.begin(), g.end());
    if (kValidateStitches) validate(out);
    return out;
}
} // namespace

Cycle absorbPath(const Cycle& host, const Path& p, const Edge& edge) {
    if (!adjacent(edge.a, p.start()) || !adjacent(edge.b, p.end()))
        throw PathError("absorb requires e.a ~ start(p) and e.b ~ end(p)");
    return spliceGuest(host, p, edge, true);
}

Path absorbPath(const Path& host, const Path& p, const Edge& edge) {
    if (!adjacent(edge.a, p.start()) || !adjacent(edge.b, p.end()))
        throw PathError("absorb requires e.a ~ start(p) and e.b ~ end(p)");
    return spliceGuest(host, p, edge, false);
}

Path concatPaths(const Path& p1, const Path& p2) {
    if (p1.v.empty() || p2.v.empty()) throw PathError("cannot concatenate an empty path");
    if (!adjacent(p1.end(), p2.start()))
        throw PathError("paths do not meet at adjacent endpoints");
    Path out;
    out.v.reserve(p1.v.size() + p2.v.size());
    out.v = p1.v;
    out.v.insert(out.v.end(), p2.v.begin(), p2.v.end());
    if (kValidateStitches) validate(out);
    return out;
}

namespace {
template <typename SeqB>
std::optional<ParallelEdgePair> scanPairs(const std::vector<Coord>& va, bool cycA,
                                          const SeqB& vb, bool cycB) {
    size_t na = va.size(), nb = vb.size();
    size_t lastA = cycA ? na : na - 1;
    size_t lastB = cycB ? nb : nb - 1;
    for (size_t i = 0; i < lastA; ++i) {
        Coord u = va[i], w = va[(i + 1) % na];
        for (size_t j = 0; j < lastB; ++j) {
            Coord p = vb[j], q = vb[(j + 1) % nb];
            if (adjacent(u, p) && adjacent(w, q)) return ParallelEdgePair{{u, w}, {p, q}};
            if (adjacent(u, q) && adjacent(w, p)) return ParallelEdgePair{{u, w}, {q, p}};
        }
    }
    return std::nullopt;
}
} // namespace

std::optional<ParallelEdgePair> findParallelPair(const Cycle& c1, const Cycle& c2) {
    return scanPairs(c1.v, true, c2.v, true);
}

std::optional<ParallelEdgePair> findParallelPair(const Cycle& c, const Path& p) {
    return scanPairs(c.v, true, p.v, false);
}

} // namespace supergrid
