#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace supergrid {

/// Forbidden conditions proved equivalent to non-existence of the requested
/// Hamiltonian structure, plus the degree-1 conditions for cycles.
enum class Cond {
    F1, // s or t is a cut vertex, or {s,t} is a vertex cut
    F3, // a degree-1 vertex exists that is neither s nor t
    F4, // the L-shaped diagonal-pair exception
    F5, // a degree-1 vertex exists (no Hamiltonian cycle in an L-shape)
    F6, // waist width 1 or a degree-1 vertex (no Hamiltonian cycle in a C-shape)
    F7, // C-shape 3-column diagonal-pair exception
    F8_1,
    F8_2,
    F8_3, // C-shape single-cell-hole exceptions (n=3, k=c=d=1)
    F9,   // waist width 1 with s,t on the same side of the hole
};

std::string to_string(Cond c);

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PathError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown by constructors when the requested structure provably does not
/// exist; carries the matched forbidden conditions.
struct ForbiddenError : std::runtime_error {
    std::vector<Cond> conditions;

    explicit ForbiddenError(std::vector<Cond> conds);
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace supergrid
