#pragma once

#include "supergrid/path.hpp"

namespace supergrid {

enum class Side : unsigned { Top = 1, Bottom = 2, Left = 4, Right = 8 };

constexpr unsigned sideMask(Side s) { return static_cast<unsigned>(s); }
constexpr unsigned kAllSides = 15;

/// Canonical Hamiltonian cycle of a rectangle: flat faces on three
/// boundaries, a concave face on `concaveOn`. Every boundary edge of the
/// three flat sides is on the cycle.
Cycle hcRect(const Shape& rect, Side concaveOn);

/// Any canonical Hamiltonian cycle whose face on `flat` is flat; the
/// concave side is chosen automatically.
Cycle hcRectWithFlatSide(const Shape& rect, Side flat);

/// True when (R(m,n), s, t) satisfies (F1): s or t is a cut vertex or
/// {s, t} is a vertex cut. Closed form, no traversal.
bool rectF1(const Shape& rect, Coord s, Coord t);

/// The (F2) predicate deciding which corner edge a Hamiltonian path can be
/// forced through.
bool rectF2(const Shape& rect, Coord s, Coord t);

/// Canonical Hamiltonian (s,t)-path; throws ForbiddenError{F1} when none
/// exists. Contains at least one boundary edge of every side whenever the
/// instance admits it.
Path hpRect(const Shape& rect, Coord s, Coord t);

/// Hamiltonian (s,t)-path with at least one boundary edge on each side in
/// `sides` (a mask of Side bits).
Path hpRectFacing(const Shape& rect, Coord s, Coord t, unsigned sides);

/// Hamiltonian (s,t)-path through ((2,1),(3,1)) when (F2) holds, else
/// through ((1,1),(2,1)). Requires m >= 3, n >= 2 and not (F1).
Path hpRectForcedEdge(const Shape& rect, Coord s, Coord t);

/// Hamiltonian (s,t)-path of a 3-row rectangle containing both last-column
/// edges ((m,1),(m,2)) and ((m,2),(m,3)); s and t must avoid that column.
Path hp3RectTail(const Shape& rect, Coord s, Coord t);

/// Exact longest (s,t)-path length by the closed-form table.
int upperBoundRect(const Shape& rect, Coord s, Coord t);

/// A longest (s,t)-path; always exists.
Path longestRect(const Shape& rect, Coord s, Coord t);

} // namespace supergrid
