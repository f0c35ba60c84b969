#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minkorder/errors.hpp"
#include "minkorder/events.hpp"
#include "oracles.hpp"

using namespace minkorder;

namespace {

Event ev1(const char* t, const char* x) {
    return {Rational::parse(t), RatVec{Rational::parse(x)}};
}

EventSet example4() {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "1"), ev1("1", "6"), ev1("2", "4"), ev1("3", "11")};
    return es;
}

} // namespace

TEST_CASE("classify_pair: frozen examples") {
    Event origin{0, {0}};
    CHECK(classify_pair(origin, ev1("1", "0")) == Separation::Timelike);
    CHECK(classify_pair(origin, ev1("0", "1")) == Separation::Spacelike);
    CHECK(classify_pair(origin, ev1("1", "1")) == Separation::Lightlike);
}

TEST_CASE("classify_pair is symmetric") {
    oracles::Rand rnd(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rnd.uniform(1, 3);
        Event a{rnd.rational(), RatVec(n)}, b{rnd.rational(), RatVec(n)};
        for (auto& c : a.x) c = rnd.rational();
        for (auto& c : b.x) c = rnd.rational();
        CHECK(classify_pair(a, b) == classify_pair(b, a));
    }
}

TEST_CASE("separation graph of the worked example is K4") {
    SepGraph g = separation_graph(example4());
    CHECK(g.k == 4);
    CHECK(g.edges.size() == 6);
}

TEST_CASE("separation graph of a timelike pair is empty") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0"), ev1("5", "1")};
    CHECK(separation_graph(es).edges.empty());
}

TEST_CASE("separation graph: one spacelike edge among three events") {
    // (0,0), (0,3), (10,0): pairs (1,3) and (2,3) timelike, (1,2) spacelike.
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0"), ev1("0", "3"), ev1("10", "0")};
    SepGraph g = separation_graph(es);
    CHECK(g.edges == std::set<std::pair<int, int>>{{0, 1}});

    CausalPoset p = causal_poset(es);
    CHECK(p.less[0][2]);
    CHECK(p.less[1][2]);
    CHECK(!p.less[0][1]);
    CHECK(!p.less[1][0]);
    CHECK(!p.less[2][0]);
}

TEST_CASE("lightlike pairs are rejected by name") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0"), ev1("1", "1")};
    CHECK_THROWS_WITH_AS(separation_graph(es), "events 1 and 2 are lightlike separated",
                         precondition_error);
    CHECK_THROWS_AS(causal_poset(es), precondition_error);
}

TEST_CASE("causal poset of a chain is a total order") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0"), ev1("2", "0"), ev1("4", "0")};
    CausalPoset p = causal_poset(es);
    CHECK(p.less[0][1]);
    CHECK(p.less[1][2]);
    CHECK(p.less[0][2]);
}

TEST_CASE("causal poset of the worked example is an antichain") {
    CausalPoset p = causal_poset(example4());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(!p.less[i][j]);
}

TEST_CASE("separation graph equals the incomparability graph of the causal poset") {
    oracles::Rand rnd(17);
    for (int trial = 0; trial < 100; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 5), rnd.uniform(1, 3));
        SepGraph g = separation_graph(es);
        CausalPoset p = causal_poset(es);
        for (int i = 0; i < es.k(); ++i)
            for (int j = i + 1; j < es.k(); ++j)
                CHECK(g.has_edge(i, j) == !p.comparable(i, j));
    }
}

TEST_CASE("dilate: identity, definition, and a timelike pair turning spacelike") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("1", "2")};
    CHECK(dilate(es, Rational(1)).events[0].x == RatVec{Rational(2)});
    CHECK(dilate(es, Rational(3)).events[0].x == RatVec{Rational(6)});
    CHECK_THROWS_AS(dilate(es, Rational(0)), input_error);
    CHECK_THROWS_AS(dilate(es, Rational(-1)), input_error);

    EventSet pair;
    pair.n = 1;
    pair.events = {ev1("0", "0"), ev1("2", "1")};
    CHECK(classify_pair(pair.events[0], pair.events[1]) == Separation::Timelike);
    EventSet big = dilate(pair, Rational(5));
    CHECK(classify_pair(big.events[0], big.events[1]) == Separation::Spacelike);
}

TEST_CASE("spacelike pairs stay spacelike under dilation by a >= 1") {
    oracles::Rand rnd(29);
    for (int trial = 0; trial < 100; ++trial) {
        EventSet es = oracles::random_spacelike_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 3));
        Rational a(rnd.uniform(1, 9), rnd.uniform(1, 3));
        if (a < Rational(1)) a = Rational(1) / a;
        EventSet d = dilate(es, a);
        for (int i = 0; i < es.k(); ++i)
            for (int j = i + 1; j < es.k(); ++j)
                CHECK(classify_pair(d.events[i], d.events[j]) == Separation::Spacelike);
    }
}

TEST_CASE("boost_time_scaled: frozen examples") {
    CHECK(boost_time_scaled(ev1("7", "3"), RatVec{Rational(0)}) == Rational(7));
    CHECK(boost_time_scaled(ev1("2", "4"), RatVec{Rational(1, 2)}) == Rational(0));
    CHECK_THROWS_AS(boost_time_scaled(ev1("0", "0"), RatVec{Rational(1)}), input_error);
    CHECK_THROWS_AS(boost_time_scaled(ev1("0", "0"), RatVec{Rational(3, 2)}), input_error);
}

TEST_CASE("worked example at v = -9/10: scaled times and induced order") {
    EventSet es = example4();
    RatVec v{Rational(-9, 10)};
    CHECK(boost_time_scaled(es.events[0], v) == Rational(9, 10));
    CHECK(boost_time_scaled(es.events[1], v) == Rational(32, 5));
    CHECK(boost_time_scaled(es.events[2], v) == Rational(28, 5));
    CHECK(boost_time_scaled(es.events[3], v) == Rational(129, 10));
    CHECK(rank_events_by_scaled_time(es, v) == oracles::perm_1based({1, 3, 2, 4}));
}

TEST_CASE("scaled time ranking agrees with the true boosted time") {
    // t' = (t - x.v) / sqrt(1 - |v|^2) pointwise, so the rankings coincide;
    // spot-check in floating point on well-separated values.
    oracles::Rand rnd(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rnd.uniform(1, 3);
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 5), n);
        RatVec v(n, Rational(0));
        v[0] = Rational(rnd.uniform(-4, 4), 10);
        double vsq = norm_sq(v).to_double();
        double gamma = 1.0 / std::sqrt(1.0 - vsq);
        Perm perm;
        try {
            perm = rank_events_by_scaled_time(es, v);
        } catch (const precondition_error&) {
            continue;
        }
        for (size_t r = 0; r + 1 < perm.size(); ++r) {
            const Event& a = es.events[perm[r]];
            const Event& b = es.events[perm[r + 1]];
            double ta = gamma * boost_time_scaled(a, v).to_double();
            double tb = gamma * boost_time_scaled(b, v).to_double();
            CHECK(ta < tb);
        }
    }
}

TEST_CASE("event set validation") {
    EventSet dup;
    dup.n = 1;
    dup.events = {ev1("1", "1"), ev1("1", "1")};
    CHECK_THROWS_AS(dup.validate(), input_error);

    EventSet wrong;
    wrong.n = 2;
    wrong.events = {ev1("0", "0")};
    CHECK_THROWS_AS(wrong.validate(), input_error);

    EventSet empty;
    empty.n = 1;
    CHECK_THROWS_AS(empty.validate(), input_error);
}
