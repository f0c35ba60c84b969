/* C interface to the minkorder library.
 *
 * All computations are exact over arbitrary-precision rationals. Inputs and
 * results travel as JSON strings (see README for the schemas); parsed inputs
 * are held behind opaque handles. Every function returns a status code and
 * writes its result through an out-parameter; returned strings are owned by
 * the caller and released with mo_string_free.
 *
 * Outputs are canonical (sorted keys, sorted order lists) and byte-identical
 * across runs for identical inputs, flags and seeds.
 */

#ifndef MINKORDER_H
#define MINKORDER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mo_status {
    MO_OK = 0,
    MO_ERR_INPUT = 1,        /* malformed input (JSON, rationals, dimensions) */
    MO_ERR_PRECONDITION = 2, /* valid input violating an operation's precondition */
    MO_ERR_INTERNAL = 3      /* broken internal invariant (a bug) */
} mo_status;

typedef struct mo_events mo_events; /* opaque: a parsed event set */
typedef struct mo_points mo_points; /* opaque: a parsed point set */

const char* mo_version(void);

/* Message for the most recent error on this thread, or "" if none. */
const char* mo_last_error(void);

void mo_string_free(char* s);

/* ---- input handles ---- */

mo_status mo_events_parse(const char* json_text, mo_events** out);
void mo_events_free(mo_events* es);

mo_status mo_points_parse(const char* json_text, mo_points** out);
void mo_points_free(mo_points* ps);

/* ---- event-set commands; each yields a JSON document ---- */

/* k x k matrix of pairwise separations ("timelike"/"lightlike"/"spacelike"). */
mo_status mo_classify(const mo_events* es, char** json_out);

/* Separation graph edges plus the strict causal relations. */
mo_status mo_graph(const mo_events* es, char** json_out);

/* Intersection poset of the event arrangement (elements with dim, mu, covers). */
mo_status mo_poset(const mo_events* es, char** json_out);

/* Number of realizable orders. ball = 0 drops the |v| < 1 restriction. */
mo_status mo_count(const mo_events* es, int ball, int cap, char** json_out);

/* Full order set with one witness velocity per order. */
mo_status mo_enumerate(const mo_events* es, int ball, int cap, char** json_out);

/* f(n,k) together with the chromatic bound of the separation graph. */
mo_status mo_bounds(const mo_events* es, char** json_out);

/* Genericity verdict with a violating pair set when false. */
mo_status mo_generic(const mo_events* es, char** json_out);

/* Characteristic polynomial and region count of the event arrangement. */
mo_status mo_charpoly(const mo_events* es, char** json_out);

/* Chromatic polynomial of the separation graph. */
mo_status mo_chromatic(const mo_events* es, char** json_out);

/* n = 1 velocity sweep: critical velocities, Lambda sequence, reduced word. */
mo_status mo_sweep(const mo_events* es, char** json_out);

/* Monte Carlo sampling of velocities in the unit ball. */
mo_status mo_monte_carlo(const mo_events* es, long samples, uint64_t seed, char** json_out);

/* ---- other inputs ---- */

/* Fixed-time arrangement of critical-velocity coincidences. Accepts either
 * {"times": ["<rational>", ...]} or an event file (its times are used). */
mo_status mo_ranking(const char* json_text, char** json_out);

/* Orders in which simultaneous flashes at the points can be observed. */
mo_status mo_classical(const mo_points* ps, int cap, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* MINKORDER_H */
