#pragma once

#include <vector>

#include "supergrid/geometry.hpp"
#include "supergrid/shape.hpp"

namespace supergrid {

/// An open simple path: pairwise-distinct vertices, consecutive ones adjacent.
struct Path {
    std::vector<Coord> v;

    int length() const { return static_cast<int>(v.size()); }
    Coord start() const { return v.front(); }
    Coord end() const { return v.back(); }
};

/// A simple cycle stored as a vertex sequence read cyclically. At least
/// three distinct vertices (triangles are cycles here; the supergrid has
/// them, and rejecting them would break the L-shape cycle theorem at its
/// smallest instance).
struct Cycle {
    std::vector<Coord> v;

    int length() const { return static_cast<int>(v.size()); }
};

void validate(const Path& p);
void validate(const Cycle& c);

bool isValidPath(const Path& p);
bool isValidCycle(const Cycle& c);

/// True when the sequence visits (u,v) or (v,u) consecutively (cyclically
/// for cycles).
bool containsEdge(const Path& p, const Edge& e);
bool containsEdge(const Cycle& c, const Edge& e);

/// Index i such that the edge is visited between position i and i+1
/// (mod size for cycles), oriented as stored; -1 if absent.
int findEdge(const std::vector<Coord>& seq, const Edge& e, bool cyclic);

Path reversed(Path p);

/// True when p is a Hamiltonian (s,t)-path of the shape.
bool isHamiltonianPath(const Shape& shape, const Path& p, Coord s, Coord t);
bool isHamiltonianCycle(const Shape& shape, const Cycle& c);

/// Every vertex inside the shape, no repeats, consecutive adjacency, with
/// the stated endpoints; not necessarily Hamiltonian.
bool isSimplePathInShape(const Shape& shape, const Path& p, Coord s, Coord t);

Path mapped(const Xform& f, Path p);
Cycle mapped(const Xform& f, Cycle c);

} // namespace supergrid
