#include "minkorder/lp.hpp"

#include <algorithm>

#include "minkorder/errors.hpp"
#include "minkorder/linalg.hpp"

namespace minkorder {

namespace {

// Rows normalized to a . v < b.
struct CanonRow {
    RatVec a;
    Rational b;
};

// Canonicalizes directions and strips trivial rows. Returns nullopt when a
// zero-normal row is unsatisfiable (the whole system is infeasible).
std::optional<std::vector<CanonRow>> canonical_rows(const StrictSystem& sys) {
    if (sys.dim < 1) throw input_error("strict system needs dimension >= 1");
    std::vector<CanonRow> rows;
    rows.reserve(sys.rows.size());
    for (const auto& r : sys.rows) {
        if (static_cast<int>(r.normal.size()) != sys.dim)
            throw input_error("strict system row dimension mismatch");
        CanonRow c{r.normal, r.bound};
        if (r.dir == StrictRow::Dir::Greater) {
            c.a = scale(Rational(-1), c.a);
            c.b = -c.b;
        }
        if (is_zero(c.a)) {
            if (c.b.sign() > 0) continue; // 0 < b: trivially true
            return std::nullopt;          // 0 < b fails: trivially false
        }
        rows.push_back(std::move(c));
    }
    return rows;
}

// max e  s.t.  a_i . v + e <= b_i,  e <= 1,  over free v.
//
// Substituting v = p - q (p, q >= 0) and shifting e by
// e0 = min(1, min_i b_i) makes every right-hand side nonnegative, so the
// all-slack basis is primal feasible and no phase-1 is needed. The shifted
// objective variable may be taken nonnegative because the true optimum is
// always >= e0. Bland's rule guarantees finite termination.
class MarginSimplex {
public:
    MarginSimplex(const std::vector<CanonRow>& rows, int n) : n_(n), m_(static_cast<int>(rows.size())) {
        e0_ = Rational(1);
        for (const auto& r : rows) e0_ = std::min(e0_, r.b);

        nstruct_ = 2 * n_ + 1;          // p, q, e
        nrows_ = m_ + 1;                // constraints + the e <= 1 row
        ncols_ = nstruct_ + nrows_ + 1; // + slacks + rhs

        tab_.assign(nrows_, RatVec(ncols_, Rational(0)));
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) {
                tab_[i][j] = rows[i].a[j];
                tab_[i][n_ + j] = -rows[i].a[j];
            }
            tab_[i][2 * n_] = 1;
            tab_[i][nstruct_ + i] = 1;
            tab_[i][ncols_ - 1] = rows[i].b - e0_;
        }
        tab_[m_][2 * n_] = 1;
        tab_[m_][nstruct_ + m_] = 1;
        tab_[m_][ncols_ - 1] = Rational(1) - e0_;

        basis_.resize(nrows_);
        for (int i = 0; i < nrows_; ++i) basis_[i] = nstruct_ + i;

        obj_.assign(ncols_, Rational(0));
        obj_[2 * n_] = -1; // maximize e (reduced-cost convention)
    }

    // Returns the optimal margin e* (in original, unshifted units).
    Rational solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_ - 1; ++j)
                if (obj_[j].sign() < 0) { enter = j; break; }
            if (enter < 0) break;

            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < nrows_; ++i) {
                if (tab_[i][enter].sign() <= 0) continue;
                Rational ratio = tab_[i][ncols_ - 1] / tab_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw internal_error("margin LP unbounded; objective is capped by construction");
            pivot(leave, enter);
        }
        return obj_[ncols_ - 1] + e0_;
    }

    RatVec witness() const {
        RatVec x(nstruct_, Rational(0));
        for (int i = 0; i < nrows_; ++i)
            if (basis_[i] < nstruct_) x[basis_[i]] = tab_[i][ncols_ - 1];
        RatVec v(n_);
        for (int j = 0; j < n_; ++j) v[j] = x[j] - x[n_ + j];
        return v;
    }

private:
    void pivot(int r, int c) {
        const Rational p = tab_[r][c];
        for (int j = 0; j < ncols_; ++j) tab_[r][j] /= p;
        for (int i = 0; i < nrows_; ++i) {
            if (i == r || tab_[i][c].is_zero()) continue;
            const Rational f = tab_[i][c];
            for (int j = 0; j < ncols_; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        if (!obj_[c].is_zero()) {
            const Rational f = obj_[c];
            for (int j = 0; j < ncols_; ++j) obj_[j] -= f * tab_[r][j];
        }
        basis_[r] = c;
    }

    int n_, m_, nstruct_ = 0, nrows_ = 0, ncols_ = 0;
    Rational e0_;
    std::vector<RatVec> tab_;
    RatVec obj_;
    std::vector<int> basis_;
};

RatVec min_norm_point_rows(const std::vector<CanonRow>& rows, int n) {
    const int m = static_cast<int>(rows.size());
    const int max_size = std::min(n, m);

    std::optional<RatVec> best;
    Rational best_sq = 0;

    std::vector<int> subset;
    // Subsets in increasing size, lexicographic within a size; the first
    // minimizer found wins, keeping the output deterministic.
    auto consider = [&](const std::vector<int>& s) {
        std::vector<RatVec> aug;
        aug.reserve(s.size());
        for (int idx : s) {
            RatVec row = rows[idx].a;
            row.push_back(rows[idx].b);
            aug.push_back(std::move(row));
        }
        Rref r = rref(std::move(aug));
        if (augmented_inconsistent(r, n + 1)) return;

        // Least-norm point of {A'v = b'}: v = A'^T y with (A'A'^T) y = b'.
        const size_t k = r.rows.size();
        std::vector<RatVec> gram(k, RatVec(k));
        RatVec rhs(k);
        for (size_t i = 0; i < k; ++i) {
            rhs[i] = r.rows[i][n];
            for (size_t j = 0; j < k; ++j) {
                Rational s2 = 0;
                for (int c = 0; c < n; ++c) s2 += r.rows[i][c] * r.rows[j][c];
                gram[i][j] = s2;
            }
        }
        auto y = solve_square(std::move(gram), std::move(rhs));
        if (!y) throw internal_error("singular Gram matrix for independent rows");
        RatVec v(n, Rational(0));
        for (size_t i = 0; i < k; ++i)
            for (int c = 0; c < n; ++c) v[c] += (*y)[i] * r.rows[i][c];

        for (const auto& row : rows)
            if (dot(row.a, v) > row.b) return; // projection leaves the closure

        Rational sq = norm_sq(v);
        if (!best || sq < best_sq) {
            best = std::move(v);
            best_sq = sq;
        }
    };

    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            consider(idx);
            return;
        }
        for (int i = start; i <= m - remaining; ++i) {
            idx.push_back(i);
            self(self, i + 1, remaining - 1);
            idx.pop_back();
        }
    };
    for (int size = 0; size <= max_size; ++size) rec(rec, 0, size);

    if (!best)
        throw internal_error("no face projection satisfied the closure of a feasible system");
    return *best;
}

} // namespace

std::optional<RatVec> lp_strict_feasible(const StrictSystem& system) {
    auto rows = canonical_rows(system);
    if (!rows) return std::nullopt;
    if (rows->empty()) return RatVec(system.dim, Rational(0));

    MarginSimplex lp(*rows, system.dim);
    if (lp.solve().sign() <= 0) return std::nullopt;

    RatVec v = lp.witness();
    for (const auto& r : *rows)
        if (!(dot(r.a, v) < r.b)) throw internal_error("LP witness fails strict re-substitution");
    return v;
}

RatVec min_norm_point_closure(const StrictSystem& system) {
    auto rows = canonical_rows(system);
    if (!rows || (!rows->empty() && !lp_strict_feasible(system)))
        throw precondition_error("min-norm projection requires a strictly feasible system");
    if (rows->empty()) return RatVec(system.dim, Rational(0));
    return min_norm_point_rows(*rows, system.dim);
}

Rational min_norm_sq_closure(const StrictSystem& system) {
    return norm_sq(min_norm_point_closure(system));
}

} // namespace minkorder
