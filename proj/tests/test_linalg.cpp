#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinberg/linalg.hpp"
#include "steinberg/rng.hpp"

using namespace steinberg;
using namespace steinberg::linalg;

namespace {

Vec vec(const RingSpec& ring, std::vector<std::int64_t> entries) {
    Vec v;
    for (auto e : entries) v.push_back(scalar_of(ring, e));
    return v;
}

Matrix mat(const RingSpec& ring, std::size_t cols, std::vector<std::vector<std::int64_t>> rows) {
    Matrix m{ring, cols, {}};
    for (auto& r : rows) m.rows.push_back(vec(ring, r));
    return m;
}

Vec mat_apply(const Matrix& m, const Vec& x) {
    Vec out;
    for (const auto& row : m.rows) {
        Scalar acc(m.ring, 0);
        for (std::size_t j = 0; j < m.cols; ++j) acc = acc + row[j] * x[j];
        out.push_back(acc);
    }
    return out;
}

Matrix random_matrix(const RingSpec& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m{ring, cols, {}};
    for (std::size_t r = 0; r < rows; ++r) {
        Vec v;
        for (std::size_t c = 0; c < cols; ++c) v.push_back(random_scalar(ring, rng));
        m.rows.push_back(std::move(v));
    }
    return m;
}

} // namespace

TEST_CASE("rref on known matrices") {
    auto rat = RingSpec::rationals();
    Matrix m = mat(rat, 2, {{1, 2}, {2, 4}});
    CHECK(rref(m) == 1);
    CHECK(m.rows == mat(rat, 2, {{1, 2}}).rows);

    Matrix id = mat(rat, 2, {{0, 3}, {5, 0}});
    CHECK(rref(id) == 2);
    CHECK(id.rows == mat(rat, 2, {{1, 0}, {0, 1}}).rows);

    Matrix m5 = mat(RingSpec::mod(5), 3, {{2, 1, 0}, {4, 2, 1}});
    CHECK(rref(m5) == 2);
    // pivots normalized to 1, pivot columns cleared
    CHECK(m5.rows[0][0].is_one());
    CHECK(m5.rows[1][0].is_zero());

    Matrix over_z = mat(RingSpec::integers(), 1, {{1}});
    CHECK_THROWS_AS(rref(over_z), RingError);
}

TEST_CASE("rref is idempotent and canonical under row permutation") {
    for (const auto& ring : {RingSpec::rationals(), RingSpec::mod(5)}) {
        Rng rng(311);
        for (int trial = 0; trial < 100; ++trial) {
            Matrix a = random_matrix(ring, 4, 5, rng);
            Matrix b = a;
            std::reverse(b.rows.begin(), b.rows.end());
            // also rescale one row by a nonzero constant: same row space
            b.rows[0] = vec_scale(random_nonzero_scalar(ring, rng), b.rows[0]);
            rref(a);
            rref(b);
            REQUIRE(same_span(a, b));
            Matrix c = a;
            rref(c);
            REQUIRE(c.rows == a.rows);
        }
    }
}

TEST_CASE("kernel vectors annihilate and have complementary dimension") {
    for (const auto& ring : {RingSpec::rationals(), RingSpec::mod(5)}) {
        Rng rng(1234);
        for (int trial = 0; trial < 60; ++trial) {
            Matrix a = random_matrix(ring, 3, 6, rng);
            std::size_t r = rank(a);
            Matrix ker = kernel(a);
            REQUIRE(ker.rows.size() == a.cols - r);
            for (const auto& v : ker.rows) REQUIRE(is_zero_vec(mat_apply(a, v)));
        }
    }
}

TEST_CASE("kernel of explicit matrix") {
    auto m5 = RingSpec::mod(5);
    Matrix a = mat(m5, 3, {{1, 1, 1}});
    Matrix ker = kernel(a);
    CHECK(ker.rows.size() == 2);
    for (const auto& v : ker.rows) CHECK(is_zero_vec(mat_apply(a, v)));

    Matrix zero{m5, 4, {}};
    CHECK(kernel(zero).rows.size() == 4);
}

TEST_CASE("solve_combination finds certificates") {
    auto rat = RingSpec::rationals();
    std::vector<Vec> cols = {vec(rat, {1, 0, 1}), vec(rat, {0, 1, 1})};
    auto sol = solve_combination(rat, cols, vec(rat, {2, 3, 5}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == scalar_of(rat, 2));
    CHECK((*sol)[1] == scalar_of(rat, 3));

    CHECK_FALSE(solve_combination(rat, cols, vec(rat, {1, 0, 0})).has_value());

    // recombination property on random systems
    for (const auto& ring : {RingSpec::rationals(), RingSpec::mod(5)}) {
        Rng rng(555);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Vec> columns;
            for (int j = 0; j < 3; ++j) {
                Vec c;
                for (int i = 0; i < 4; ++i) c.push_back(random_scalar(ring, rng));
                columns.push_back(c);
            }
            Vec target = zero_vec(ring, 4);
            std::vector<Scalar> mix;
            for (int j = 0; j < 3; ++j) {
                mix.push_back(random_scalar(ring, rng));
                target = vec_add(target, vec_scale(mix.back(), columns[j]));
            }
            auto got = solve_combination(ring, columns, target);
            REQUIRE(got.has_value());
            Vec rebuilt = zero_vec(ring, 4);
            for (int j = 0; j < 3; ++j) rebuilt = vec_add(rebuilt, vec_scale((*got)[j], columns[j]));
            REQUIRE(rebuilt == target);
        }
    }
}

TEST_CASE("span membership, sums and intersections") {
    auto rat = RingSpec::rationals();
    Matrix a = span_basis(rat, 3, {vec(rat, {1, 0, 0}), vec(rat, {0, 1, 0})});
    Matrix b = span_basis(rat, 3, {vec(rat, {0, 1, 0}), vec(rat, {0, 0, 1})});
    CHECK(in_span(a, vec(rat, {2, -3, 0})));
    CHECK_FALSE(in_span(a, vec(rat, {0, 0, 1})));
    CHECK(sum_dim(a, b) == 3);
    CHECK(intersection_dim(a, b) == 1);
    CHECK_FALSE(same_span(a, b));
    CHECK(same_span(a, span_basis(rat, 3, {vec(rat, {7, 3, 0}), vec(rat, {1, -1, 0})})));
}
