#include "minkorder.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "minkorder/errors.hpp"
#include "minkorder/graph.hpp"
#include "minkorder/json_io.hpp"

using namespace minkorder;

struct mo_events {
    EventSet es;
};
struct mo_points {
    PointSet ps;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename Fn>
mo_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MO_OK;
    } catch (const input_error& e) {
        g_last_error = e.what();
        return MO_ERR_INPUT;
    } catch (const precondition_error& e) {
        g_last_error = e.what();
        return MO_ERR_PRECONDITION;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MO_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MO_ERR_INTERNAL;
    }
}

void emit(char** json_out, const json& j) {
    if (!json_out) throw input_error("null output parameter");
    *json_out = copy_out(dump_canonical(j));
    if (!*json_out) throw internal_error("out of memory");
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json a = json::array();
    for (const auto& [i, j] : pairs) a.push_back({i + 1, j + 1});
    return a;
}

} // namespace

extern "C" {

const char* mo_version(void) { return "1.0.0"; }

const char* mo_last_error(void) { return g_last_error.c_str(); }

void mo_string_free(char* s) { std::free(s); }

mo_status mo_events_parse(const char* json_text, mo_events** out) {
    *out = nullptr;
    return guarded([&] {
        if (!json_text) throw input_error("null input");
        auto h = new mo_events{events_from_string(json_text)};
        *out = h;
    });
}

void mo_events_free(mo_events* es) { delete es; }

mo_status mo_points_parse(const char* json_text, mo_points** out) {
    *out = nullptr;
    return guarded([&] {
        if (!json_text) throw input_error("null input");
        auto h = new mo_points{points_from_string(json_text)};
        *out = h;
    });
}

void mo_points_free(mo_points* ps) { delete ps; }

mo_status mo_classify(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        json matrix = json::array();
        for (int i = 0; i < E.k(); ++i) {
            json row = json::array();
            for (int j = 0; j < E.k(); ++j)
                row.push_back(i == j ? "self"
                                     : to_string(classify_pair(E.events[i], E.events[j])));
            matrix.push_back(std::move(row));
        }
        json out{{"k", E.k()}, {"n", E.n}, {"matrix", matrix}};
        emit(json_out, out);
    });
}

mo_status mo_graph(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        SepGraph g = separation_graph(E);
        CausalPoset cp = causal_poset(E);
        json edges = json::array();
        for (const auto& [i, j] : g.edges) edges.push_back({i + 1, j + 1});
        json rel = json::array();
        for (int i = 0; i < cp.k; ++i)
            for (int j = 0; j < cp.k; ++j)
                if (cp.less[i][j]) rel.push_back({i + 1, j + 1});
        json out{{"k", E.k()}, {"edges", edges}, {"causal_relations", rel}};
        emit(json_out, out);
    });
}

mo_status mo_poset(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        Arrangement a = build_event_arrangement(E, separation_graph(E));
        json out = poset_to_json(intersection_poset(a));
        json planes = json::array();
        for (const auto& p : a.planes) {
            json pj;
            pj["normal"] = json::array();
            for (const auto& c : p.normal) pj["normal"].push_back(c.str());
            pj["offset"] = p.offset.str();
            pj["labels"] = pairs_to_json(p.labels);
            planes.push_back(std::move(pj));
        }
        out["planes"] = planes;
        emit(json_out, out);
    });
}

mo_status mo_count(const mo_events* es, int ball, int cap, char** json_out) {
    return guarded([&] {
        OrderSet os = feasible_orders(es->es, ball != 0, cap);
        json out{{"ball_restricted", os.ball_restricted}, {"count", os.orders.size()}};
        emit(json_out, out);
    });
}

mo_status mo_enumerate(const mo_events* es, int ball, int cap, char** json_out) {
    return guarded([&] {
        emit(json_out, order_set_to_json(feasible_orders(es->es, ball != 0, cap)));
    });
}

mo_status mo_bounds(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        SepGraph g = separation_graph(E);
        json out{{"k", E.k()},
                 {"n", E.n},
                 {"f_bound", f_bound(E.n, E.k()).get_str()},
                 {"graph_order_bound", graph_order_bound(g, E.n).get_str()}};
        emit(json_out, out);
    });
}

mo_status mo_generic(const mo_events* es, char** json_out) {
    return guarded([&] {
        GenericityResult r = is_generic(es->es);
        json out{{"generic", r.generic}};
        out["certificate"] = r.generic ? json() : pairs_to_json(r.certificate);
        emit(json_out, out);
    });
}

mo_status mo_charpoly(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        Arrangement a = build_event_arrangement(E, separation_graph(E));
        json out{{"coefficients", poly_to_json(characteristic_polynomial(a))},
                 {"regions", region_count(a).get_str()}};
        emit(json_out, out);
    });
}

mo_status mo_chromatic(const mo_events* es, char** json_out) {
    return guarded([&] {
        SepGraph g = separation_graph(es->es);
        Graph graph{g.k, g.edges};
        json out{{"coefficients", poly_to_json(chromatic_polynomial(graph))}};
        emit(json_out, out);
    });
}

mo_status mo_sweep(const mo_events* es, char** json_out) {
    return guarded([&] {
        const EventSet& E = es->es;
        CriticalVelocityTable table = critical_velocities(E);
        LambdaSequence lambda = lambda_sequence(E);
        emit(json_out, sweep_to_json(table, lambda, reduced_word(lambda)));
    });
}

mo_status mo_monte_carlo(const mo_events* es, long samples, uint64_t seed, char** json_out) {
    return guarded([&] {
        json out = order_set_to_json(monte_carlo_orders(es->es, samples, seed));
        out["samples"] = samples;
        out["seed"] = seed;
        emit(json_out, out);
    });
}

mo_status mo_ranking(const char* json_text, char** json_out) {
    return guarded([&] {
        if (!json_text) throw input_error("null input");
        json j = json::parse(std::string(json_text), nullptr, false);
        if (j.is_discarded()) throw input_error("malformed JSON input");
        std::vector<Rational> times;
        if (j.is_object() && j.contains("times")) {
            if (!j["times"].is_array()) throw input_error("\"times\" must be an array");
            for (const auto& t : j["times"]) {
                if (!t.is_string()) throw input_error("times must be rational strings");
                times.push_back(Rational::parse(t.get<std::string>()));
            }
        } else {
            EventSet E = events_from_json(j);
            for (const auto& e : E.events) times.push_back(e.t);
        }
        Arrangement d = ranking_arrangement(times);
        json out{{"k", times.size()},
                 {"dim", d.dim},
                 {"hyperplanes", d.size()},
                 {"coefficients", poly_to_json(characteristic_polynomial(d))},
                 {"regions", region_count(d).get_str()}};
        emit(json_out, out);
    });
}

mo_status mo_classical(const mo_points* ps, int cap, char** json_out) {
    return guarded([&] {
        json out = order_set_to_json(observed_orders(ps->ps, cap));
        out["regions"] = region_count(bisector_arrangement(ps->ps)).get_str();
        emit(json_out, out);
    });
}

} // extern "C"
