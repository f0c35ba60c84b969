#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minkorder/rational.hpp"

namespace minkorder {

/// A point of (n+1)-dimensional Minkowski space: time plus n space
/// coordinates, in units where the speed of light is 1.
struct Event {
    Rational t;
    RatVec x;
};

/// k distinct events with a common spatial dimension n >= 1.
/// Indices are 0-based internally; every serialized label is 1-based.
struct EventSet {
    int n = 0;
    std::vector<Event> events;

    int k() const { return static_cast<int>(events.size()); }
    void validate() const; // throws input_error
};

enum class Separation { Timelike, Lightlike, Spacelike };

std::string to_string(Separation s);

/// Sign of the Minkowski norm squared (dt^2 - |dx|^2) of the difference.
Separation classify_pair(const Event& a, const Event& b);

/// Vertices [0..k), one edge per spacelike separated pair.
struct SepGraph {
    int k = 0;
    std::set<std::pair<int, int>> edges; // i < j

    bool has_edge(int i, int j) const {
        return edges.count({std::min(i, j), std::max(i, j)}) > 0;
    }
};

/// Throws precondition_error naming the pair if any two events are
/// lightlike separated.
SepGraph separation_graph(const EventSet& es);

/// The causal order: i < j iff timelike separated with t_i < t_j.
struct CausalPoset {
    int k = 0;
    std::vector<std::vector<bool>> less; // strict relation

    bool comparable(int i, int j) const { return less[i][j] || less[j][i]; }
};

CausalPoset causal_poset(const EventSet& es);

/// (t, x) -> (t, a x) for a > 0.
EventSet dilate(const EventSet& es, const Rational& a);

/// t - x . v for |v| < 1: a fixed positive multiple of the boosted time t',
/// so it induces the same ranking of events while staying rational.
Rational boost_time_scaled(const Event& e, const RatVec& v);

/// Requires no lightlike pair; throws precondition_error otherwise.
void require_no_lightlike(const EventSet& es);

} // namespace minkorder
