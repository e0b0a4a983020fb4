#pragma once

#include "steinberg/ring.hpp"

#include <optional>
#include <vector>

namespace steinberg::linalg {

using Vec = std::vector<Scalar>;

/// Row-major matrix over a field. Rows all share the ring and width.
struct Matrix {
    RingSpec ring;
    std::size_t cols = 0;
    std::vector<Vec> rows;

    static Matrix zero(RingSpec ring, std::size_t cols) { return {ring, cols, {}}; }
};

Vec zero_vec(const RingSpec& ring, std::size_t n);
bool is_zero_vec(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/// In-place reduction to reduced row echelon form; drops zero rows and
/// returns the rank. Pivots are chosen left to right, so the result is the
/// canonical basis of the row space (two spans are equal iff their reduced
/// bases are identical).
std::size_t rref(Matrix& m);

/// Canonical basis of the span of the given vectors.
Matrix span_basis(const RingSpec& ring, std::size_t cols, const std::vector<Vec>& vectors);

std::size_t rank(const Matrix& m);

/// Membership test against a basis already in reduced echelon form.
bool in_span(const Matrix& reduced, const Vec& v);

bool same_span(const Matrix& reduced_a, const Matrix& reduced_b);

/// dim(span A + span B); both inputs reduced.
std::size_t sum_dim(const Matrix& reduced_a, const Matrix& reduced_b);

/// dim(span A intersect span B) via dim A + dim B - dim(A + B); both inputs reduced.
std::size_t intersection_dim(const Matrix& reduced_a, const Matrix& reduced_b);

/// Canonical basis of the kernel {x : m x = 0}, as a reduced matrix whose
/// rows are the basis vectors.
Matrix kernel(const Matrix& m);

/// Solves sum_i c_i columns[i] = target; returns the coefficients with free
/// variables set to zero, or nullopt when the system is inconsistent.
std::optional<Vec> solve_combination(const RingSpec& ring, const std::vector<Vec>& columns,
                                     const Vec& target);

} // namespace steinberg::linalg
