#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkorder/errors.hpp"
#include "minkorder/ordering.hpp"
#include "oracles.hpp"

using namespace minkorder;
using oracles::perm_1based;

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

bool witness_reproduces_order(const EventSet& es, const OrderWitness& w) {
    return rank_events_by_scaled_time(es, w.velocity) == w.order;
}

} // namespace

TEST_CASE("order_system: two simultaneous spacelike events") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0"), ev1("0", "1")};
    // Order 1,2 needs 0 < -v, i.e. the single row v < 0.
    StrictSystem sys = order_system(es, perm_1based({1, 2}));
    REQUIRE(sys.rows.size() == 1);
    CHECK(sys.rows[0].normal == RatVec{Rational(1)});
    CHECK(sys.rows[0].bound == Rational(0));
    CHECK(sys.rows[0].dir == StrictRow::Dir::Less);
    auto w = lp_strict_feasible(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] < Rational(0));
}

TEST_CASE("order_system: identity order of increasing times holds at v = 0") {
    oracles::Rand rnd(5);
    for (int trial = 0; trial < 30; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 5), rnd.uniform(1, 3));
        std::sort(es.events.begin(), es.events.end(),
                  [](const Event& a, const Event& b) { return a.t < b.t; });
        bool distinct_times = true;
        for (int i = 0; i + 1 < es.k(); ++i)
            if (es.events[i].t == es.events[i + 1].t) distinct_times = false;
        if (!distinct_times) continue;
        Perm identity(es.k());
        std::iota(identity.begin(), identity.end(), 0);
        StrictSystem sys = order_system(es, identity);
        RatVec zero(es.n, Rational(0));
        for (const auto& r : sys.rows) CHECK(dot(r.normal, zero) < r.bound);
    }
}

TEST_CASE("order_system validates the permutation") {
    EventSet es = example4();
    CHECK_THROWS_AS(order_system(es, Perm{0, 1}), input_error);
    CHECK_THROWS_AS(order_system(es, Perm{0, 1, 2, 2}), input_error);
}

TEST_CASE("worked example: exactly the seven expected orders, with sound witnesses") {
    EventSet es = example4();
    OrderSet os = feasible_orders(es, true);
    std::vector<Perm> expected = {
        perm_1based({1, 2, 3, 4}), perm_1based({1, 2, 4, 3}), perm_1based({1, 3, 2, 4}),
        perm_1based({2, 1, 4, 3}), perm_1based({2, 4, 1, 3}), perm_1based({4, 2, 1, 3}),
        perm_1based({4, 2, 3, 1})};
    CHECK(os.orders == expected); // lexicographic
    CHECK(count_orders(es) == 7);
    for (const auto& w : os.witnesses) {
        CHECK(norm_sq(w.velocity) < Rational(1));
        CHECK(witness_reproduces_order(es, w));
    }
}

TEST_CASE("two timelike events: one order; two spacelike events: two orders") {
    EventSet tl;
    tl.n = 1;
    tl.events = {ev1("0", "0"), ev1("5", "1")};
    OrderSet os = feasible_orders(tl, true);
    REQUIRE(os.orders.size() == 1);
    CHECK(os.orders[0] == perm_1based({1, 2}));

    EventSet sl;
    sl.n = 1;
    sl.events = {ev1("0", "0"), ev1("0", "1")};
    CHECK(count_orders(sl) == 2);
}

TEST_CASE("a single event has one order") {
    EventSet es;
    es.n = 1;
    es.events = {ev1("0", "0")};
    CHECK(count_orders(es) == 1);
}

TEST_CASE("permutation cap is enforced with a pointer to Monte Carlo") {
    EventSet es = example4();
    CHECK_THROWS_AS(feasible_orders(es, true, 3), precondition_error);
    try {
        feasible_orders(es, true, 3);
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("Monte Carlo") != std::string::npos);
    }
}

TEST_CASE("three generic spacelike events in the plane realize all 6 orders after dilation") {
    EventSet es;
    es.n = 2;
    es.events = {{Rational(0), {Rational(10), Rational(0)}},
                 {Rational(1), {Rational(0), Rational(10)}},
                 {Rational(2), {Rational(10), Rational(10)}}};
    REQUIRE(is_generic(es).generic);
    auto a = saturating_dilation(es);
    REQUIRE(a.has_value());
    CHECK(count_orders(dilate(es, *a)) == 6);
}

TEST_CASE("graph_order_bound: frozen and cross-checked against the Stirling bound") {
    SepGraph edgeless{3, {}};
    CHECK(graph_order_bound(edgeless, 2) == 1);

    SepGraph path3{3, {{0, 1}, {1, 2}}};
    CHECK(graph_order_bound(path3, 1) == 3); // chi = t^3 - 2t^2 + t

    for (int k = 2; k <= 6; ++k) {
        SepGraph complete{k, {}};
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) complete.edges.insert({i, j});
        for (int n = 0; n <= k + 1; ++n)
            CHECK(graph_order_bound(complete, n) == f_bound(n, k));
    }
}

TEST_CASE("order count obeys the Stirling bound; equality only when generic") {
    oracles::Rand rnd(67);
    for (int trial = 0; trial < 25; ++trial) {
        int k = rnd.uniform(2, 4), n = rnd.uniform(1, 3);
        EventSet es = oracles::random_spacelike_events(rnd, k, n);
        long count = count_orders(es);
        BigInt bound = f_bound(n, k);
        CHECK(BigInt(count) <= bound);
        if (BigInt(count) == bound) CHECK(is_generic(es).generic);
    }
}

TEST_CASE("generic spacelike sets saturate the Stirling bound after dilation") {
    oracles::Rand rnd(71);
    int generic_seen = 0;
    for (int trial = 0; trial < 12; ++trial) {
        int k = rnd.uniform(2, 4), n = rnd.uniform(1, 3);
        EventSet es = oracles::random_spacelike_events(rnd, k, n);
        if (!is_generic(es).generic) continue;
        ++generic_seen;
        auto a = saturating_dilation(es);
        REQUIRE(a.has_value());
        CHECK(BigInt(count_orders(dilate(es, *a))) == f_bound(n, k));
    }
    CHECK(generic_seen >= 3);
}

TEST_CASE("order count obeys the chromatic bound of the separation graph") {
    oracles::Rand rnd(73);
    for (int trial = 0; trial < 25; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 3));
        CHECK(BigInt(count_orders(es)) <= graph_order_bound(separation_graph(es), es.n));
    }
}

TEST_CASE("ball-restricted orders respect causality") {
    oracles::Rand rnd(79);
    for (int trial = 0; trial < 25; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 3));
        CausalPoset cp = causal_poset(es);
        OrderSet os = feasible_orders(es, true);
        for (const auto& p : os.orders) {
            std::vector<int> position(p.size());
            for (size_t r = 0; r < p.size(); ++r) position[p[r]] = static_cast<int>(r);
            for (int i = 0; i < es.k(); ++i)
                for (int j = 0; j < es.k(); ++j)
                    if (cp.less[i][j]) CHECK(position[i] < position[j]);
        }
    }
}

TEST_CASE("unrestricted LP order count equals the all-pairs region count") {
    // The scaled-time comparison hyperplane of a timelike pair exists in
    // velocity space whenever the pair's space coordinates differ, even
    // though it lies outside the unit ball; regions of the arrangement over
    // all such pairs biject with the unrestricted strict orders.
    oracles::Rand rnd(83);
    for (int trial = 0; trial < 20; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 3));
        OrderSet os = feasible_orders(es, false);
        Arrangement full = build_event_arrangement(es, oracles::distinct_position_graph(es));
        CHECK(BigInt(os.orders.size()) == region_count(full));
        for (const auto& w : os.witnesses)
            CHECK(oracles::rank_by_formal_tau(es, w.velocity) == w.order);

        // The separation-graph arrangement can only have fewer regions.
        Arrangement spacelike_only = build_event_arrangement(es, separation_graph(es));
        CHECK(region_count(spacelike_only) <= region_count(full));
        CHECK(BigInt(count_orders(es)) <= region_count(spacelike_only));
    }
}

TEST_CASE("for all-spacelike sets the separation-graph arrangement is the full one") {
    oracles::Rand rnd(89);
    for (int trial = 0; trial < 15; ++trial) {
        EventSet es = oracles::random_spacelike_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 3));
        OrderSet os = feasible_orders(es, false);
        CHECK(BigInt(os.orders.size()) ==
              region_count(build_event_arrangement(es, separation_graph(es))));
    }
}

TEST_CASE("a mixed configuration where the separation-graph count understates the orders") {
    // Events 1 = (0,(0,0)), 2 = (1,(0,1/10)) timelike, 3 = (0,(10,0)).
    // The timelike comparison flips inside a region of the two spacelike
    // hyperplanes, so the full arrangement has 6 regions but the
    // separation-graph arrangement only 4, and only 3 orders meet the ball.
    EventSet es;
    es.n = 2;
    es.events = {{Rational(0), {Rational(0), Rational(0)}},
                 {Rational(1), {Rational(0), Rational(1, 10)}},
                 {Rational(0), {Rational(10), Rational(0)}}};
    CHECK(feasible_orders(es, false).orders.size() == 6);
    CHECK(region_count(build_event_arrangement(es, oracles::distinct_position_graph(es))) == 6);
    CHECK(region_count(build_event_arrangement(es, separation_graph(es))) == 4);
    CHECK(count_orders(es) == 3);
}

TEST_CASE("monte carlo: empty at zero samples, subset in general, causal pair exact") {
    EventSet es = example4();
    CHECK(monte_carlo_orders(es, 0, 1).orders.empty());

    OrderSet exact = feasible_orders(es, true);
    OrderSet mc = monte_carlo_orders(es, 2000, 12345);
    for (const auto& p : mc.orders) CHECK(exact.contains(p));
    CHECK(mc.orders.size() > 1);
    for (const auto& w : mc.witnesses) {
        CHECK(norm_sq(w.velocity) < Rational(1));
        CHECK(witness_reproduces_order(es, w));
    }

    EventSet tl;
    tl.n = 1;
    tl.events = {ev1("0", "0"), ev1("5", "1")};
    OrderSet tmc = monte_carlo_orders(tl, 500, 7);
    REQUIRE(tmc.orders.size() == 1);
    CHECK(tmc.orders[0] == perm_1based({1, 2}));
}

TEST_CASE("monte carlo is seed-deterministic and subset for random inputs") {
    oracles::Rand rnd(97);
    for (int trial = 0; trial < 10; ++trial) {
        EventSet es = oracles::random_mixed_events(rnd, rnd.uniform(2, 4), rnd.uniform(1, 2));
        OrderSet a = monte_carlo_orders(es, 300, 42 + trial);
        OrderSet b = monte_carlo_orders(es, 300, 42 + trial);
        CHECK(a.orders == b.orders);
        OrderSet exact = feasible_orders(es, true);
        for (const auto& p : a.orders) CHECK(exact.contains(p));
    }
}
