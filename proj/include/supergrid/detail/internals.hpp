#pragma once

#include <optional>

#include "supergrid/rect.hpp"

// Internal construction entry points shared by the solvers. Everything here
// works in canonical local coordinates: (1,1) is the upper-left cell of the
// piece under construction.
namespace supergrid::detail {

Path rowPathL(int x1, int x2, int y);
Path colPathL(int x, int y1, int y2);

bool rectF1Local(int m, int n, Coord s, Coord t);
bool rectF2Local(int n, Coord s, Coord t);

/// Hamiltonian (s,t)-path of R(m,n) with at least one boundary edge on
/// every side in `hardSides`; prefers covering all four sides.
Path hpRectLocal(int m, int n, Coord s, Coord t, unsigned hardSides);

/// Hamiltonian (s,t)-path through `target`, which must be ((1,1),(2,1)) or
/// ((2,1),(3,1)).
Path hpRectForcedLocal(int m, int n, Coord s, Coord t, const Edge& target, unsigned hardSides);

Cycle hcRectLocal(int m, int n, Side concaveOn);
bool hcConcaveLegal(int m, int n, Side concaveOn);

/// A canonical Hamiltonian cycle guaranteed flat on every side of the mask.
Cycle hcRectFlatLocal(int m, int n, unsigned mustFlat);

Path hp3RectTailLocal(int m, Coord s, Coord t);

/// First edge of the sequence lying on the given boundary side of R(m,n).
std::optional<Edge> findSideEdgeLocal(const std::vector<Coord>& seq, bool cyclic, Side side,
                                      int m, int n);

/// Maps a caller-frame side through the linear part of a transform.
Side mapSide(const Xform& x, Side s);
unsigned mapSides(const Xform& x, unsigned mask);

} // namespace supergrid::detail
