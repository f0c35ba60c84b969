#include "minkorder/classical.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "minkorder/errors.hpp"
#include "minkorder/lp.hpp"

namespace minkorder {

void PointSet::validate() const {
    if (n < 1) throw input_error("point set needs dimension n >= 1");
    if (points.empty()) throw input_error("point set needs at least one point");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw input_error("point coordinates do not match dimension n");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw input_error("points " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " coincide");
}

namespace {

// |x - p_a|^2 < |x - p_b|^2, expanded to a strict linear row in x:
// 2 (p_b - p_a) . x < |p_b|^2 - |p_a|^2.
StrictRow closer_than_row(const RatVec& pa, const RatVec& pb) {
    return {scale(Rational(2), sub(pb, pa)), norm_sq(pb) - norm_sq(pa), StrictRow::Dir::Less};
}

} // namespace

Arrangement bisector_arrangement(const PointSet& ps) {
    ps.validate();
    Arrangement a;
    a.dim = ps.n;
    const Rational half(1, 2);
    for (int i = 0; i < ps.k(); ++i)
        for (int j = i + 1; j < ps.k(); ++j)
            a.add(sub(ps.points[i], ps.points[j]),
                  half * (norm_sq(ps.points[i]) - norm_sq(ps.points[j])), std::make_pair(i, j));
    return a;
}

OrderSet observed_orders(const PointSet& ps, int cap) {
    ps.validate();
    const int k = ps.k();
    if (k > cap)
        throw precondition_error("point count " + std::to_string(k) +
                                 " exceeds the permutation cap " + std::to_string(cap));

    OrderSet out;
    out.ball_restricted = false;
    Perm perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        StrictSystem sys;
        sys.dim = ps.n;
        for (int r = 0; r + 1 < k; ++r)
            sys.rows.push_back(closer_than_row(ps.points[perm[r]], ps.points[perm[r + 1]]));
        auto w = lp_strict_feasible(sys);
        if (!w) continue;
        out.orders.push_back(perm);
        out.witnesses.push_back({perm, std::move(*w)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Perm observed_order_at(const PointSet& ps, const RatVec& x) {
    ps.validate();
    if (static_cast<int>(x.size()) != ps.n)
        throw input_error("observation point dimension mismatch");
    const int k = ps.k();
    std::vector<Rational> d(k);
    for (int i = 0; i < k; ++i) d[i] = norm_sq(sub(x, ps.points[i]));
    Perm perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return d[a] < d[b]; });
    for (int r = 0; r + 1 < k; ++r)
        if (d[perm[r]] == d[perm[r + 1]])
            throw precondition_error("observation point is equidistant from points " +
                                     std::to_string(perm[r] + 1) + " and " +
                                     std::to_string(perm[r + 1] + 1));
    return perm;
}

OrderSet observed_orders_mc(const PointSet& ps, long samples, std::uint64_t seed) {
    ps.validate();
    if (samples < 0) throw input_error("negative sample count");

    std::mt19937_64 rng(seed);
    std::vector<Perm> found;
    std::vector<OrderWitness> witnesses;
    for (long s = 0; s < samples; ++s) {
        const int level = 3 + static_cast<int>(s % 12);
        const BigInt d = BigInt(1) << level;
        // Boxes grow with the sample index so distant observers appear too.
        const BigInt radius = BigInt(1) << (1 + static_cast<int>(s % 16));
        const std::uint64_t span = (static_cast<std::uint64_t>(1) << (level + 1)) - 1;
        RatVec x(ps.n);
        for (int c = 0; c < ps.n; ++c) {
            BigInt num(static_cast<long>(rng() % span));
            num -= (d - 1);
            x[c] = Rational(num * radius, d);
        }
        Perm perm;
        try {
            perm = observed_order_at(ps, x);
        } catch (const precondition_error&) {
            continue; // equidistant tie: discard
        }
        if (std::find(found.begin(), found.end(), perm) == found.end()) {
            found.push_back(perm);
            witnesses.push_back({perm, x});
        }
    }

    std::vector<size_t> idx(found.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return found[a] < found[b]; });
    OrderSet out;
    out.ball_restricted = false;
    for (size_t i : idx) {
        out.orders.push_back(found[i]);
        out.witnesses.push_back(witnesses[i]);
    }
    return out;
}

GenericityResult is_generic_points(const PointSet& ps) {
    ps.validate();
    if (ps.k() == 1) return {true, {}};
    std::map<std::pair<int, int>, std::pair<RatVec, Rational>> planes;
    const Rational half(1, 2);
    for (int i = 0; i < ps.k(); ++i)
        for (int j = i + 1; j < ps.k(); ++j)
            planes[{i, j}] = {sub(ps.points[i], ps.points[j]),
                              half * (norm_sq(ps.points[i]) - norm_sq(ps.points[j]))};
    return generic_pair_family(ps.k(), ps.n, planes);
}

} // namespace minkorder
