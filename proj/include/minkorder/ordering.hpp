#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minkorder/arrangement.hpp"
#include "minkorder/events.hpp"
#include "minkorder/lp.hpp"

namespace minkorder {

/// An ordering of the event indices, earliest first (0-based internally).
using Perm = std::vector<int>;

struct OrderWitness {
    Perm order;
    RatVec velocity;
};

/// The set of temporal orderings realized across reference frames, with one
/// witness velocity per order. When ball_restricted, every witness lies in
/// the open unit ball and the cardinality is the observable order count.
struct OrderSet {
    bool ball_restricted = true;
    std::vector<Perm> orders; // lexicographically sorted, distinct
    std::vector<OrderWitness> witnesses;

    bool contains(const Perm& p) const;
};

inline constexpr int kDefaultPermutationCap = 8;

/// The k-1 strict inequalities stating that consecutive events of the
/// permutation have increasing scaled boost times t - x . v.
StrictSystem order_system(const EventSet& es, const Perm& perm);

/// Tries every permutation of the k events (lexicographic order) and keeps
/// those whose order_system is strictly feasible; with restrict_to_ball the
/// minimum closure norm must also fall inside the open unit ball, and the
/// witness is moved inside the ball along the segment toward the min-norm
/// point.
OrderSet feasible_orders(const EventSet& es, bool restrict_to_ball,
                         int cap = kDefaultPermutationCap);

/// |feasible_orders(es, true)|.
long count_orders(const EventSet& es, int cap = kDefaultPermutationCap);

/// 1 + a_1 + ... + a_n, where chi_G(t) = t^k - a_1 t^{k-1} + ... and
/// a_i = 0 for i >= k.
BigInt graph_order_bound(const SepGraph& g, int n);

/// Seeded stochastic lower bound: sample rational velocities in the open
/// unit ball on a per-sample refined grid, rank events by scaled boost time,
/// discard ties. Always a subset of feasible_orders(es, true).
OrderSet monte_carlo_orders(const EventSet& es, long samples, std::uint64_t seed);

/// Smallest power-of-two dilation factor a (by repeated doubling) for which
/// count_orders(dilate(es, a)) reaches its maximum over all dilations, i.e.
/// every strictly realizable order acquires a subluminal witness. Returns
/// nullopt if max_doublings is exhausted.
std::optional<Rational> saturating_dilation(const EventSet& es, int max_doublings = 64,
                                            int cap = kDefaultPermutationCap);

Perm rank_events_by_scaled_time(const EventSet& es, const RatVec& v); // ties -> precondition_error

} // namespace minkorder
