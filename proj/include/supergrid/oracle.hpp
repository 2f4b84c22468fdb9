#pragma once

#include <optional>
#include <vector>

#include "supergrid/path.hpp"

namespace supergrid {

/// Caps for the exhaustive searches; instances beyond them are refused
/// rather than run unbounded.
struct OracleBudget {
    int maxVertices = 24;
    long long maxNodesExpanded = 400'000'000;
};

struct LongestResult {
    int length = 0;
    Path witness;
};

/// Exact longest simple (s,t)-path by branch-and-bound enumeration with a
/// connectivity bound. Deterministic: the witness is the lexicographically
/// least maximum path under coordinate order.
LongestResult oracleLongest(const Shape& shape, Coord s, Coord t, OracleBudget budget = {});

bool oracleHpExists(const Shape& shape, Coord s, Coord t, OracleBudget budget = {});

bool oracleHcExists(const Shape& shape, OracleBudget budget = {});

/// Some Hamiltonian (s,t)-path containing every required edge, or nullopt
/// when exhaustion proves there is none.
std::optional<Path> oracleHpWithEdges(const Shape& shape, Coord s, Coord t,
                                      const std::vector<Edge>& required,
                                      OracleBudget budget = {});

} // namespace supergrid
