#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "minkorder/events.hpp"
#include "minkorder/linalg.hpp"
#include "minkorder/polynomial.hpp"

namespace minkorder {

/// Affine hyperplane {v : normal . v = offset} with optional event-pair
/// labels. Stored in canonical primitive-integer form so that two
/// hyperplanes are equal as sets iff their fields compare equal.
struct Hyperplane {
    RatVec normal; // nonzero
    Rational offset;
    std::vector<std::pair<int, int>> labels; // 0-based pairs, i < j
};

/// Finite set of distinct affine hyperplanes in a common ambient dimension.
/// Adding a duplicate merges its label into the existing plane.
struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> planes;

    /// Returns the index of the stored (possibly pre-existing) plane.
    int add(const RatVec& normal, const Rational& offset,
            std::optional<std::pair<int, int>> label = std::nullopt);
    size_t size() const { return planes.size(); }
};

/// One nonempty intersection of hyperplanes.
struct Flat {
    FlatKey key; // canonical augmented RREF; empty = ambient space
    int dim = 0;
    BigInt mu;
    std::vector<int> defining; // one representative set of plane indices
};

/// All nonempty intersections ordered by reverse inclusion, with the ambient
/// space as bottom element and Mobius values from the zero-sum recursion.
struct IntersectionPoset {
    int ambient_dim = 0;
    std::vector<Flat> flats;              // flats[0] = ambient; codim nondecreasing
    std::vector<std::vector<bool>> leq;   // leq[i][j]: flat i lies below flat j

    std::vector<std::vector<int>> covers() const; // transitive reduction, for export
};

IntersectionPoset intersection_poset(const Arrangement& a);

/// chi(t) = sum over flats of mu(x) t^dim(x); degree = ambient dimension.
IntPoly characteristic_polynomial(const Arrangement& a);

/// Number of regions, (-1)^n chi(-1).
BigInt region_count(const Arrangement& a);
/// The same count as the absolute-coefficient sum of chi.
BigInt region_count_coeff_sum(const Arrangement& a);

/// Cone over the arrangement: homogenize into dimension n+1 and add the
/// hyperplane u = 0. Doubles the region count.
Arrangement cone(const Arrangement& a);

/// One hyperplane t_i - t_j = (x_i - x_j) . v per edge of g, in velocity
/// space R^n, labeled by the event pair.
Arrangement build_event_arrangement(const EventSet& es, const SepGraph& g);

struct GenericityResult {
    bool generic = false;
    std::vector<std::pair<int, int>> certificate; // 0-based violating pair set
};

/// Genericity of a pair-indexed hyperplane family {H_ij}: the intersection
/// poset must be isomorphic, via merging i~j per block, to the partitions of
/// [k] with rank at most dim. Checks that each such partition's flat is
/// nonempty of the right dimension, that distinct partitions give distinct
/// flats, that no intersection exceeds rank dim, and that the order relation
/// matches refinement.
GenericityResult generic_pair_family(
    int k, int dim, const std::map<std::pair<int, int>, std::pair<RatVec, Rational>>& planes);

/// Genericity of an event set (requires all pairs spacelike separated).
GenericityResult is_generic(const EventSet& es);

/// Signless Stirling numbers of the first kind; 0 outside 1 <= i <= k.
BigInt stirling_c(int k, int i);
/// f(n,k) = c(k,k) + c(k,k-1) + ... + c(k,k-n), the generic order-count bound.
BigInt f_bound(int n, int k);

} // namespace minkorder
