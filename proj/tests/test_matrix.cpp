#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qfrob/matrix.hpp"

using namespace qfrob;

namespace {

ScalarMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-1, 1);
    ScalarMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = RatFunc(coeff(rng)) * RatFunc::q(expo(rng)) + RatFunc(coeff(rng));
    return m;
}

}  // namespace

TEST_CASE("kron basics") {
    auto i2 = ScalarMatrix::identity(2);
    auto k = kron(i2, i2);
    CHECK(k.is_identity());
    CHECK(k.shape() == std::vector<int>{2, 2});

    // single-entry matrices land at the mixed-radix position
    ScalarMatrix e11(2, 2), e22(2, 2);
    e11.at(0, 0) = RatFunc(1);
    e22.at(1, 1) = RatFunc(1);
    auto ke = kron(e11, e22);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(ke.at(i, j) == ((i == 1 && j == 1) ? RatFunc(1) : RatFunc()));

    std::mt19937 rng(1);
    auto k23 = kron(random_matrix(rng, 2, 2), ScalarMatrix::identity(3));
    CHECK(k23.rows() == 6);
    CHECK(k23.shape() == std::vector<int>{2, 3});
}

TEST_CASE("embed_factor") {
    std::mt19937 rng(2);
    ScalarMatrix r = random_matrix(rng, 4, 4);
    CHECK(embed_factor(r, 1, 2) == [&] {
        ScalarMatrix c = r;
        c.set_shape({2, 2});
        return c;
    }());
    ScalarMatrix e = embed_factor(r, 2, 3);
    CHECK(e.rows() == 8);
    CHECK(e == kron(ScalarMatrix::identity(2), r));
    CHECK(embed_factor(r, 2, 3).rows() == 8);
    CHECK_THROWS_AS(embed_factor(r, 3, 3), IndexError);
}

TEST_CASE("partial trace") {
    std::mt19937 rng(3);
    ScalarMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
    auto k = kron(a, b);
    // product state: tracing one factor leaves the other scaled by its trace
    CHECK(partial_trace(k, {2}) == a.scaled(b.trace()));
    CHECK(partial_trace(k, {1}) == b.scaled(a.trace()));
    // full trace
    auto full = partial_trace(k, {1, 2});
    CHECK(full.rows() == 1);
    CHECK(full.at(0, 0) == k.trace());
    // identity with shape [2,2]
    auto i4 = ScalarMatrix::identity(4);
    i4.set_shape({2, 2});
    CHECK(partial_trace(i4, {1}) == ScalarMatrix::identity(2).scaled(RatFunc(2)));
    // tracing factors one at a time in any order gives the full trace
    ScalarMatrix m = random_matrix(rng, 8, 8);
    m.set_shape({2, 2, 2});
    RatFunc t = m.trace();
    CHECK(partial_trace(partial_trace(m, {2}), {2}).trace() == t);
    CHECK(partial_trace(partial_trace(m, {3}), {1}).trace() == t);
    CHECK_THROWS_AS(partial_trace(random_matrix(rng, 4, 4), {1}), ShapeError);
}

TEST_CASE("row reduction") {
    CHECK(row_reduce(ScalarMatrix::identity(3)).rank == 3);

    std::mt19937 rng(4);
    ScalarMatrix two_rows(2, 4);
    for (int j = 0; j < 4; ++j) {
        two_rows.at(0, j) = random_matrix(rng, 1, 1).at(0, 0);
        two_rows.at(1, j) = two_rows.at(0, j);
    }
    CHECK(row_reduce(two_rows).rank == 1);

    ScalarMatrix m(2, 2);
    m.at(0, 0) = RatFunc::q();
    m.at(0, 1) = RatFunc(1);
    m.at(1, 0) = RatFunc::q(2);
    m.at(1, 1) = RatFunc::q();
    CHECK(row_reduce(m).rank == 1);

    // rank invariance under row swaps and nonzero row scaling
    ScalarMatrix a = random_matrix(rng, 4, 5);
    int base = row_reduce(a).rank;
    ScalarMatrix swapped = a;
    for (int j = 0; j < 5; ++j) std::swap(swapped.at(0, j), swapped.at(2, j));
    CHECK(row_reduce(swapped).rank == base);
    ScalarMatrix scaled = a;
    for (int j = 0; j < 5; ++j) scaled.at(1, j) *= RatFunc::q(3) + RatFunc(1);
    CHECK(row_reduce(scaled).rank == base);

    // both strategies agree
    for (int trial = 0; trial < 10; ++trial) {
        ScalarMatrix x = random_matrix(rng, 5, 6);
        auto ff = row_reduce(x, ReduceStrategy::FractionFree);
        auto fi = row_reduce(x, ReduceStrategy::Field);
        CHECK(ff.rank == fi.rank);
        CHECK(ff.pivot_cols == fi.pivot_cols);
        CHECK(ff.rref == fi.rref);
    }
}

TEST_CASE("solve") {
    std::mt19937 rng(5);
    ScalarMatrix b = random_matrix(rng, 2, 1);
    auto s = solve(ScalarMatrix::identity(2), b);
    CHECK(s.unique);
    CHECK(s.x == b);

    // singular consistent system
    ScalarMatrix a(2, 2);
    a.at(0, 0) = RatFunc(1);
    a.at(0, 1) = RatFunc(2);
    a.at(1, 0) = RatFunc(2);
    a.at(1, 1) = RatFunc(4);
    ScalarMatrix rhs(2, 1);
    rhs.at(0, 0) = RatFunc(3);
    rhs.at(1, 0) = RatFunc(6);
    auto s2 = solve(a, rhs);
    CHECK(!s2.unique);
    CHECK(a * s2.x == rhs);

    rhs.at(1, 0) = RatFunc(7);
    CHECK_THROWS_AS(solve(a, rhs), InconsistentSystem);

    // random consistent systems in both strategies
    for (int trial = 0; trial < 8; ++trial) {
        ScalarMatrix m = random_matrix(rng, 4, 3);
        ScalarMatrix x = random_matrix(rng, 3, 2);
        ScalarMatrix y = m * x;
        for (auto strat : {ReduceStrategy::FractionFree, ReduceStrategy::Field}) {
            auto sol = solve(m, y, strat);
            CHECK(m * sol.x == y);
        }
    }
}
