#pragma once

#include <optional>
#include <vector>

#include "minkorder/rational.hpp"

namespace minkorder {

/// One open halfspace: normal . v < bound (Less) or normal . v > bound
/// (Greater). A zero normal is legal only because it makes the row trivially
/// true or false; the solvers detect that rather than keep the row.
struct StrictRow {
    enum class Dir { Less, Greater };
    RatVec normal;
    Rational bound;
    Dir dir = Dir::Less;
};

/// Conjunction of strict halfspaces in a common ambient dimension.
struct StrictSystem {
    int dim = 0;
    std::vector<StrictRow> rows;
};

/// Decides whether the open polyhedron is nonempty and returns an interior
/// rational point when it is.
///
/// Method: introduce a slack margin e, maximize e subject to the shifted
/// non-strict constraints and e <= 1, with exact rational pivoting and
/// Bland's smallest-index rule; the strict system is feasible iff the
/// optimum is positive. Fully deterministic, so the witness is reproducible.
std::optional<RatVec> lp_strict_feasible(const StrictSystem& system);

/// Exact minimizer of |v|^2 over the closure of the open polyhedron.
/// Precondition: lp_strict_feasible(system) succeeds (throws
/// precondition_error otherwise).
///
/// The minimizer is the projection of the origin onto the affine span of its
/// active face, so it is found by enumerating subsets of at most dim rows
/// (lexicographically, smallest first), projecting the origin onto each
/// consistent equality subsystem via the normal equations, and keeping the
/// best projection that satisfies every closure inequality.
RatVec min_norm_point_closure(const StrictSystem& system);
Rational min_norm_sq_closure(const StrictSystem& system);

} // namespace minkorder
