#include "minkorder/linalg.hpp"

#include <algorithm>

#include "minkorder/errors.hpp"

namespace minkorder {

Rref rref(std::vector<RatVec> rows) {
    Rref out;
    if (rows.empty()) return out;
    const size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw input_error("ragged matrix in rref");

    size_t next = 0; // next row slot to fill
    for (size_t col = 0; col < ncols && next < rows.size(); ++col) {
        // smallest-index pivot row keeps the routine deterministic
        size_t piv = next;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        const Rational lead = rows[next][col];
        for (size_t j = col; j < ncols; ++j) rows[next][j] /= lead;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col].is_zero()) continue;
            const Rational f = rows[i][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[next][j];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

bool augmented_inconsistent(const Rref& r, int ncols) {
    return !r.pivot_cols.empty() && r.pivot_cols.back() == ncols - 1;
}

bool rowspace_contained(const FlatKey& a, const Rref& b) {
    for (const auto& row : a) {
        RatVec rem = row;
        for (size_t i = 0; i < b.rows.size(); ++i) {
            const int p = b.pivot_cols[i];
            if (rem[p].is_zero()) continue;
            const Rational f = rem[p];
            for (size_t j = p; j < rem.size(); ++j) rem[j] -= f * b.rows[i][j];
        }
        if (!is_zero(rem)) return false;
    }
    return true;
}

bool rowspace_contained(const FlatKey& a, const FlatKey& b) {
    Rref rb;
    rb.rows = b;
    for (const auto& row : b) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        rb.pivot_cols.push_back(static_cast<int>(p));
    }
    return rowspace_contained(a, rb);
}

std::optional<AffineSet> affine_from_rref(const Rref& r, int dim) {
    const int ncols = dim + 1;
    if (augmented_inconsistent(r, ncols)) return std::nullopt;

    std::vector<int> pivot_of_col(dim, -1);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) pivot_of_col[r.pivot_cols[i]] = static_cast<int>(i);

    AffineSet s;
    s.point.assign(dim, Rational(0));
    for (size_t i = 0; i < r.rows.size(); ++i) s.point[r.pivot_cols[i]] = r.rows[i][dim];

    for (int col = 0; col < dim; ++col) {
        if (pivot_of_col[col] >= 0) continue; // basic column
        RatVec dir(dim, Rational(0));
        dir[col] = 1;
        for (size_t i = 0; i < r.rows.size(); ++i) dir[r.pivot_cols[i]] = -r.rows[i][col];
        s.basis.push_back(std::move(dir));
    }
    return s;
}

std::optional<AffineSet> solve_linear(const std::vector<std::pair<RatVec, Rational>>& equalities,
                                      int dim) {
    if (dim < 0) throw input_error("negative dimension");
    std::vector<RatVec> rows;
    rows.reserve(equalities.size());
    for (const auto& [normal, rhs] : equalities) {
        if (static_cast<int>(normal.size()) != dim)
            throw input_error("equality dimension mismatch");
        RatVec row = normal;
        row.push_back(rhs);
        rows.push_back(std::move(row));
    }
    return affine_from_rref(rref(std::move(rows)), dim);
}

std::optional<RatVec> solve_square(std::vector<RatVec> m, RatVec rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw input_error("solve_square shape mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw input_error("solve_square shape mismatch");
        m[i].push_back(rhs[i]);
    }
    Rref r = rref(std::move(m));
    if (r.rows.size() != n) return std::nullopt; // singular or inconsistent
    RatVec y(n);
    for (size_t i = 0; i < n; ++i) {
        if (r.pivot_cols[i] != static_cast<int>(i)) return std::nullopt;
        y[i] = r.rows[i][n];
    }
    return y;
}

} // namespace minkorder
