#pragma once

#include <optional>

#include "supergrid/path.hpp"

namespace supergrid {

/// A pair of parallel edges: e1.a ~ e2.a and e1.b ~ e2.b. The splice site
/// for combining vertex-disjoint cycles and paths.
struct ParallelEdgePair {
    Edge e1;
    Edge e2;
};

/// Combines two vertex-disjoint cycles across a parallel edge pair with
/// e1 on c1 and e2 on c2. The two pair edges are removed and the two cross
/// edges (e1.a,e2.a), (e1.b,e2.b) added; the orientation of c1 is kept.
Cycle mergeCycles(const Cycle& c1, const Cycle& c2, const ParallelEdgePair& pair);

/// Combines a cycle into a path across a parallel pair with e1 on the cycle
/// and e2 on the path; start and end of the path are preserved.
Path mergeCycleIntoPath(const Path& p, const Cycle& c, const ParallelEdgePair& pair);

/// Splices a lone vertex into an edge it adjoins; the result is the same
/// kind one vertex longer.
Cycle insertVertex(const Cycle& target, Coord x, const Edge& edge);
Path insertVertex(const Path& target, Coord x, const Edge& edge);

/// Replaces edge (u,v) of the host by u -> p -> v where u ~ start(p) and
/// v ~ end(p); the host keeps its kind and endpoints.
Cycle absorbPath(const Cycle& host, const Path& p, const Edge& edge);
Path absorbPath(const Path& host, const Path& p, const Edge& edge);

/// end(p1) ~ start(p2), vertex-disjoint.
Path concatPaths(const Path& p1, const Path& p2);

/// Scans for any parallel pair between the two sequences; plumbing for
/// tests and small cases (solvers locate pairs geometrically).
std::optional<ParallelEdgePair> findParallelPair(const Cycle& c1, const Cycle& c2);
std::optional<ParallelEdgePair> findParallelPair(const Cycle& c, const Path& p);

} // namespace supergrid
