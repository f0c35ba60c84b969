#include "minkorder/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "minkorder/errors.hpp"
#include "minkorder/graph.hpp"

namespace minkorder {

bool OrderSet::contains(const Perm& p) const {
    return std::binary_search(orders.begin(), orders.end(), p);
}

StrictSystem order_system(const EventSet& es, const Perm& perm) {
    es.validate();
    require_no_lightlike(es);
    const int k = es.k();
    if (static_cast<int>(perm.size()) != k) throw input_error("permutation length mismatch");
    std::vector<bool> seen(k, false);
    for (int p : perm) {
        if (p < 0 || p >= k || seen[p]) throw input_error("not a permutation of the event indices");
        seen[p] = true;
    }
    // Consecutive comparisons suffice: they chain into the full order.
    StrictSystem sys;
    sys.dim = es.n;
    for (int r = 0; r + 1 < k; ++r) {
        const Event& a = es.events[perm[r]];
        const Event& b = es.events[perm[r + 1]];
        // t_a - x_a.v < t_b - x_b.v
        sys.rows.push_back({sub(b.x, a.x), b.t - a.t, StrictRow::Dir::Less});
    }
    return sys;
}

namespace {

// Interior witness from a strict witness w and the min-norm closure point m:
// every point of (m, w] is strictly feasible, and points near m have norm
// close to the (sub-unit) minimum, so halving the step terminates.
RatVec pull_inside_ball(const RatVec& w, const RatVec& m) {
    Rational lambda(1);
    RatVec v = w;
    while (!(norm_sq(v) < Rational(1))) {
        lambda = lambda / 2;
        v = add(m, scale(lambda, sub(w, m)));
    }
    return v;
}

} // namespace

OrderSet feasible_orders(const EventSet& es, bool restrict_to_ball, int cap) {
    es.validate();
    require_no_lightlike(es);
    const int k = es.k();
    if (k > cap)
        throw precondition_error(
            "event count " + std::to_string(k) + " exceeds the permutation cap " +
            std::to_string(cap) + "; raise the cap or use Monte Carlo sampling (mc)");

    OrderSet out;
    out.ball_restricted = restrict_to_ball;
    Perm perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        StrictSystem sys = order_system(es, perm);
        auto w = lp_strict_feasible(sys);
        if (!w) continue;
        if (restrict_to_ball) {
            RatVec m = min_norm_point_closure(sys);
            if (!(norm_sq(m) < Rational(1))) continue;
            RatVec v = pull_inside_ball(*w, m);
            out.orders.push_back(perm);
            out.witnesses.push_back({perm, std::move(v)});
        } else {
            out.orders.push_back(perm);
            out.witnesses.push_back({perm, std::move(*w)});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

long count_orders(const EventSet& es, int cap) {
    return static_cast<long>(feasible_orders(es, true, cap).orders.size());
}

BigInt graph_order_bound(const SepGraph& g, int n) {
    if (n < 0) throw input_error("graph_order_bound needs n >= 0");
    Graph graph{g.k, g.edges};
    IntPoly chi = chromatic_polynomial(graph);
    BigInt bound = 1;
    for (int i = 1; i <= n && i < g.k; ++i) {
        BigInt a = chi.coeff(g.k - i);
        if (i % 2 != 0) a = -a;
        bound += a;
    }
    return bound;
}

Perm rank_events_by_scaled_time(const EventSet& es, const RatVec& v) {
    const int k = es.k();
    std::vector<Rational> tau(k);
    for (int i = 0; i < k; ++i) tau[i] = boost_time_scaled(es.events[i], v);
    Perm perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return tau[a] < tau[b]; });
    for (int r = 0; r + 1 < k; ++r)
        if (tau[perm[r]] == tau[perm[r + 1]])
            throw precondition_error("events " + std::to_string(perm[r] + 1) + " and " +
                                     std::to_string(perm[r + 1] + 1) +
                                     " are simultaneous at this velocity");
    return perm;
}

OrderSet monte_carlo_orders(const EventSet& es, long samples, std::uint64_t seed) {
    es.validate();
    require_no_lightlike(es);
    if (samples < 0) throw input_error("negative sample count");

    std::mt19937_64 rng(seed);
    // Raw engine output only: distributions are not reproducible across
    // standard library implementations.
    auto draw_int = [&](std::uint64_t span) { return static_cast<long>(rng() % span); };

    std::vector<Perm> found;
    std::vector<OrderWitness> witnesses;
    for (long s = 0; s < samples; ++s) {
        // Grid denominator refines with the sample index.
        const int level = 4 + static_cast<int>(s % 24);
        const BigInt d = BigInt(1) << level;
        const std::uint64_t span = (static_cast<std::uint64_t>(1) << (level + 1)) - 1;
        RatVec v(es.n);
        bool inside = false;
        for (int attempt = 0; attempt < 64 && !inside; ++attempt) {
            for (int c = 0; c < es.n; ++c) {
                BigInt num(draw_int(span));
                num -= (d - 1);
                v[c] = Rational(num, d);
            }
            inside = norm_sq(v) < Rational(1);
        }
        if (!inside) continue;
        Perm perm;
        try {
            perm = rank_events_by_scaled_time(es, v);
        } catch (const precondition_error&) {
            continue; // tie: discard the sample
        }
        if (std::find(found.begin(), found.end(), perm) == found.end()) {
            found.push_back(perm);
            witnesses.push_back({perm, v});
        }
    }

    std::vector<size_t> idx(found.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return found[a] < found[b]; });
    OrderSet out;
    out.ball_restricted = true;
    for (size_t i : idx) {
        out.orders.push_back(found[i]);
        out.witnesses.push_back(witnesses[i]);
    }
    return out;
}

std::optional<Rational> saturating_dilation(const EventSet& es, int max_doublings, int cap) {
    // Dilating by a rescales velocity space by 1/a and leaves strict
    // feasibility unchanged, so the reachable maximum is the unrestricted
    // order count and order pi enters the ball once a^2 exceeds its
    // min-norm-squared. Doubling a against the precomputed norms is the
    // repeated-dilation search without redundant pivoting.
    OrderSet unrestricted = feasible_orders(es, false, cap);
    std::vector<Rational> min_norms;
    min_norms.reserve(unrestricted.orders.size());
    for (const auto& perm : unrestricted.orders)
        min_norms.push_back(min_norm_sq_closure(order_system(es, perm)));

    Rational a(1);
    for (int step = 0; step <= max_doublings; ++step, a *= 2) {
        const Rational a2 = a * a;
        bool all = true;
        for (const auto& m : min_norms)
            if (!(m < a2)) {
                all = false;
                break;
            }
        if (all) return a;
    }
    return std::nullopt;
}

} // namespace minkorder
