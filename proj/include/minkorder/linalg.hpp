#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minkorder/rational.hpp"

namespace minkorder {

/// Reduced row echelon form of a rational matrix. Zero rows are dropped, so
/// `rows` is a canonical basis of the row space: two matrices have the same
/// row space iff their Rref::rows compare equal.
struct Rref {
    std::vector<RatVec> rows;
    std::vector<int> pivot_cols; // one per row, strictly increasing
};

Rref rref(std::vector<RatVec> rows);

/// Canonical form of the affine set {v : a_i . v = b_i}, encoded as the RREF
/// of the augmented matrix [A | b] (width n + 1). Empty key = ambient space.
using FlatKey = std::vector<RatVec>;

/// True iff the RREF of an augmented system has a pivot in the last column,
/// i.e. the system is inconsistent.
bool augmented_inconsistent(const Rref& r, int ncols);

/// True iff every row of `a` lies in the row space of the RREF `b`.
bool rowspace_contained(const FlatKey& a, const Rref& b);
bool rowspace_contained(const FlatKey& a, const FlatKey& b);

/// Solution set of a consistent linear system: a representative point plus a
/// basis of the direction space.
struct AffineSet {
    RatVec point;
    std::vector<RatVec> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Exact Gaussian elimination over the rationals. Returns the affine solution
/// set of {normal . v = rhs}, or nullopt when the system is inconsistent.
std::optional<AffineSet> solve_linear(const std::vector<std::pair<RatVec, Rational>>& equalities,
                                      int dim);

/// Affine solution set from a precomputed augmented RREF (width dim + 1).
std::optional<AffineSet> affine_from_rref(const Rref& r, int dim);

/// Solves the square system M y = rhs; nullopt when M is singular.
std::optional<RatVec> solve_square(std::vector<RatVec> m, RatVec rhs);

} // namespace minkorder
