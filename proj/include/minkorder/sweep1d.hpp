#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "minkorder/arrangement.hpp"
#include "minkorder/events.hpp"
#include "minkorder/ordering.hpp"

namespace minkorder {

/// v_ij = (t_i - t_j)/(x_i - x_j) for each pair, the velocity at which
/// events i and j trade places (n = 1 only).
using CriticalVelocityTable = std::map<std::pair<int, int>, Rational>;

CriticalVelocityTable critical_velocities(const EventSet& es);

/// The sequence of event orderings seen as the observer velocity sweeps
/// from -1 to 1: one permutation per open interval between consecutive
/// critical velocities. Consecutive entries differ by one adjacent
/// transposition; first and last are reverses of each other.
struct LambdaSequence {
    std::vector<Perm> perms;          // 1 + k(k-1)/2 entries
    std::vector<Rational> sample_velocities; // the exact midpoints used
};

/// Requires all v_ij distinct and strictly inside (-1, 1); throws
/// precondition_error naming the violation otherwise.
LambdaSequence lambda_sequence(const EventSet& es);

/// Positions (1-based, left element of the swapped pair) turning each Lambda
/// entry into the next.
std::vector<int> reduced_word(const LambdaSequence& lambda);

/// Number of maximal chains in the weak order of S_k: the standard Young
/// tableaux count of staircase shape (k-1, k-2, ..., 1), via the product
/// formula (k choose 2)! / (1^{k-1} 3^{k-2} ... (2k-3)^1).
BigInt staircase_chain_count(int k);

/// (1 + k(k-1)/2) * staircase_chain_count(k): upper bound for the number of
/// distinct Lambda sequences over all inputs.
BigInt sequence_upper_bound(int k);

/// With times fixed, the loci where two critical velocities collide:
/// hyperplanes (t_i - t_j)(x_r - x_s) = (t_r - t_s)(x_i - x_j) in R^k over
/// the space coordinates, one per unordered pair of index pairs. Its region
/// count bounds (and for fixed times equals) the number of distinct Lambda.
Arrangement ranking_arrangement(const std::vector<Rational>& times);

/// The k=5 reduced word known not to arise from any point configuration;
/// absent for every other k.
std::optional<std::vector<int>> known_unrealizable_word(int k);

} // namespace minkorder
