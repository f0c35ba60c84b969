#pragma once

#include <cstdint>

#include "minkorder/arrangement.hpp"
#include "minkorder/ordering.hpp"

namespace minkorder {

/// k distinct points of Euclidean n-space, each emitting a flash at t = 0.
struct PointSet {
    int n = 0;
    std::vector<RatVec> points;

    int k() const { return static_cast<int>(points.size()); }
    void validate() const;
};

/// One hyperplane per pair: the perpendicular bisector
/// (p_i - p_j) . x = (|p_i|^2 - |p_j|^2) / 2, labeled by the pair.
Arrangement bisector_arrangement(const PointSet& ps);

/// All orders in which the flashes can be observed from points of R^n,
/// ranked by exact squared distance. Reuses the ordering engine with the
/// ball restriction disabled: each comparison |x - p|^2 < |x - q|^2 is
/// linear in x after expansion.
OrderSet observed_orders(const PointSet& ps, int cap = kDefaultPermutationCap);

/// Ranking of the points by squared distance from x; throws
/// precondition_error naming the pair when x is equidistant from two points.
Perm observed_order_at(const PointSet& ps, const RatVec& x);

/// Seeded deterministic sampling of observation points over growing boxes;
/// always a subset of observed_orders(ps).
OrderSet observed_orders_mc(const PointSet& ps, long samples, std::uint64_t seed);

/// Genericity of the bisector family in the truncated-partition-lattice
/// sense; generic point sets realize exactly f_bound(n, k) orders.
GenericityResult is_generic_points(const PointSet& ps);

} // namespace minkorder
