#include "minkorder/events.hpp"

#include "minkorder/errors.hpp"

namespace minkorder {

void EventSet::validate() const {
    if (n < 1) throw input_error("event set needs spatial dimension n >= 1");
    if (events.empty()) throw input_error("event set needs at least one event");
    for (const auto& e : events)
        if (static_cast<int>(e.x.size()) != n)
            throw input_error("event space coordinates do not match dimension n");
    for (size_t i = 0; i < events.size(); ++i)
        for (size_t j = i + 1; j < events.size(); ++j)
            if (events[i].t == events[j].t && events[i].x == events[j].x)
                throw input_error("events " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " coincide");
}

std::string to_string(Separation s) {
    switch (s) {
        case Separation::Timelike: return "timelike";
        case Separation::Lightlike: return "lightlike";
        case Separation::Spacelike: return "spacelike";
    }
    return "?";
}

Separation classify_pair(const Event& a, const Event& b) {
    if (a.x.size() != b.x.size()) throw input_error("classify_pair dimension mismatch");
    const Rational dt = a.t - b.t;
    const Rational mink = dt * dt - norm_sq(sub(a.x, b.x));
    if (mink.sign() > 0) return Separation::Timelike;
    if (mink.sign() < 0) return Separation::Spacelike;
    return Separation::Lightlike;
}

void require_no_lightlike(const EventSet& es) {
    for (int i = 0; i < es.k(); ++i)
        for (int j = i + 1; j < es.k(); ++j)
            if (classify_pair(es.events[i], es.events[j]) == Separation::Lightlike)
                throw precondition_error("events " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " are lightlike separated");
}

SepGraph separation_graph(const EventSet& es) {
    es.validate();
    require_no_lightlike(es);
    SepGraph g;
    g.k = es.k();
    for (int i = 0; i < g.k; ++i)
        for (int j = i + 1; j < g.k; ++j)
            if (classify_pair(es.events[i], es.events[j]) == Separation::Spacelike)
                g.edges.insert({i, j});
    return g;
}

CausalPoset causal_poset(const EventSet& es) {
    es.validate();
    require_no_lightlike(es);
    const int k = es.k();
    CausalPoset p;
    p.k = k;
    p.less.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (classify_pair(es.events[i], es.events[j]) == Separation::Timelike &&
                es.events[i].t < es.events[j].t)
                p.less[i][j] = true;
        }
    // Causality is transitive in Minkowski space; a failure here is a bug.
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (p.less[a][b] && p.less[b][c] && !p.less[a][c])
                    throw internal_error("causal order is not transitive");
    return p;
}

EventSet dilate(const EventSet& es, const Rational& a) {
    if (a.sign() <= 0) throw input_error("dilation factor must be positive");
    EventSet out = es;
    for (auto& e : out.events) e.x = scale(a, e.x);
    return out;
}

Rational boost_time_scaled(const Event& e, const RatVec& v) {
    if (v.size() != e.x.size()) throw input_error("velocity dimension mismatch");
    if (!(norm_sq(v) < Rational(1)))
        throw input_error("velocity must lie in the open unit ball");
    return e.t - dot(e.x, v);
}

} // namespace minkorder
