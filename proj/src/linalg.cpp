#include "steinberg/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace steinberg::linalg {

Vec zero_vec(const RingSpec& ring, std::size_t n) {
    return Vec(n, Scalar(ring, 0));
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x = c * x;
    return out;
}

std::size_t rref(Matrix& m) {
    if (!m.ring.is_field()) throw RingError("exact elimination requires a field");
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows.size(); ++col) {
        // first row at or below `rank` with a nonzero entry in this column
        std::size_t pivot = rank;
        while (pivot < m.rows.size() && m.rows[pivot][col].is_zero()) ++pivot;
        if (pivot == m.rows.size()) continue;
        std::swap(m.rows[rank], m.rows[pivot]);

        Scalar inv = ring_inverse(m.rows[rank][col]);
        for (std::size_t j = col; j < m.cols; ++j)
            if (!m.rows[rank][j].is_zero()) m.rows[rank][j] = inv * m.rows[rank][j];

        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (r == rank) continue;
            const Scalar& f = m.rows[r][col];
            if (f.is_zero()) continue;
            Scalar factor = f; // copy: entry is overwritten below
            for (std::size_t j = col; j < m.cols; ++j) {
                if (m.rows[rank][j].is_zero()) continue;
                m.rows[r][j] = m.rows[r][j] - factor * m.rows[rank][j];
            }
        }
        ++rank;
    }
    m.rows.resize(rank, zero_vec(m.ring, m.cols));
    return rank;
}

Matrix span_basis(const RingSpec& ring, std::size_t cols, const std::vector<Vec>& vectors) {
    Matrix m{ring, cols, vectors};
    rref(m);
    return m;
}

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy);
}

bool in_span(const Matrix& reduced, const Vec& v) {
    // reduce v against the echelon rows; member iff the residue vanishes
    Vec residue = v;
    for (const auto& row : reduced.rows) {
        std::size_t lead = 0;
        while (lead < reduced.cols && row[lead].is_zero()) ++lead;
        if (lead == reduced.cols) continue;
        if (residue[lead].is_zero()) continue;
        residue = vec_sub(residue, vec_scale(residue[lead], row));
    }
    return is_zero_vec(residue);
}

bool same_span(const Matrix& reduced_a, const Matrix& reduced_b) {
    return reduced_a.rows == reduced_b.rows;
}

std::size_t sum_dim(const Matrix& reduced_a, const Matrix& reduced_b) {
    Matrix joint{reduced_a.ring, reduced_a.cols, reduced_a.rows};
    joint.rows.insert(joint.rows.end(), reduced_b.rows.begin(), reduced_b.rows.end());
    return rref(joint);
}

std::size_t intersection_dim(const Matrix& reduced_a, const Matrix& reduced_b) {
    return reduced_a.rows.size() + reduced_b.rows.size() - sum_dim(reduced_a, reduced_b);
}

Matrix kernel(const Matrix& m) {
    Matrix work = m;
    rref(work);

    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols, false);
    for (const auto& row : work.rows) {
        std::size_t lead = 0;
        while (lead < m.cols && row[lead].is_zero()) ++lead;
        pivot_col.push_back(lead);
        is_pivot[lead] = true;
    }

    Matrix ker{m.ring, m.cols, {}};
    Scalar one(m.ring, 1);
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.ring, m.cols);
        v[free] = one;
        for (std::size_t r = 0; r < work.rows.size(); ++r)
            v[pivot_col[r]] = -work.rows[r][free];
        ker.rows.push_back(std::move(v));
    }
    rref(ker); // canonical basis
    return ker;
}

std::optional<Vec> solve_combination(const RingSpec& ring, const std::vector<Vec>& columns,
                                     const Vec& target) {
    const std::size_t n = columns.size();
    const std::size_t rows = target.size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("column height mismatch");

    // augmented system [A | target], unknowns are the combination coefficients
    Matrix aug{ring, n + 1, {}};
    aug.rows.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row;
        row.reserve(n + 1);
        for (std::size_t j = 0; j < n; ++j) row.push_back(columns[j][r]);
        row.push_back(target[r]);
        aug.rows.push_back(std::move(row));
    }
    rref(aug);

    Vec coeffs = zero_vec(ring, n);
    for (const auto& row : aug.rows) {
        std::size_t lead = 0;
        while (lead < n + 1 && row[lead].is_zero()) ++lead;
        if (lead == n + 1) continue;
        if (lead == n) return std::nullopt; // row reads 0 = 1
        coeffs[lead] = row[n];              // free variables stay zero
    }
    return coeffs;
}

} // namespace steinberg::linalg
