#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace gradekit;
using testsupport::random_subspace;
using testsupport::random_vector;

namespace {

CycVec qvec(int conductor, std::initializer_list<int> values) {
    CycVec v;
    for (int x : values) v.push_back(Cyclotomic(conductor, Rational(x)));
    return v;
}

} // namespace

TEST_CASE("canonicalize drops dependent rows and is unique") {
    const int n = 4;
    Subspace s = Subspace::canonicalize(n, 2, {qvec(n, {1, 1}), qvec(n, {2, 2})});
    CHECK(s.dim() == 1);
    CHECK(s.basis().front() == qvec(n, {1, 1}));

    Subspace full = Subspace::canonicalize(n, 2, {qvec(n, {0, 1}), qvec(n, {1, 0})});
    CHECK(full.dim() == 2);
    CHECK(full.basis()[0] == qvec(n, {1, 0}));
    CHECK(full.basis()[1] == qvec(n, {0, 1}));

    Subspace empty = Subspace::canonicalize(n, 3, {});
    CHECK(empty.dim() == 0);
    CHECK(empty.is_zero());
}

TEST_CASE("canonicalize is idempotent on random subspaces") {
    std::mt19937 gen(11);
    for (int iter = 0; iter < 30; ++iter) {
        Subspace s = random_subspace(gen, 4, 5, 3);
        Subspace again = Subspace::canonicalize(4, 5, s.basis());
        CHECK(s == again);
    }
}

TEST_CASE("meet, join and containment on simple examples") {
    const int n = 4;
    Subspace x = Subspace::canonicalize(n, 2, {qvec(n, {1, 0})});
    Subspace y = Subspace::canonicalize(n, 2, {qvec(n, {0, 1})});
    CHECK(meet(x, y).is_zero());
    CHECK(join(x, y) == Subspace::full(n, 2));
    CHECK(Subspace::full(n, 2).contains(x));
    CHECK_FALSE(x.contains(Subspace::full(n, 2)));
    CHECK_THROWS_AS(meet(x, Subspace::full(n, 3)), error);
}

TEST_CASE("dimension law dim(meet) + dim(join) = dim U + dim V") {
    std::mt19937 gen(202);
    for (int iter = 0; iter < 40; ++iter) {
        Subspace u = random_subspace(gen, 4, 6, 1 + iter % 5);
        Subspace v = random_subspace(gen, 4, 6, 1 + (iter / 2) % 5);
        CHECK(meet(u, v).dim() + join(u, v).dim() == u.dim() + v.dim());
    }
}

TEST_CASE("meet is contained in both operands") {
    std::mt19937 gen(303);
    for (int iter = 0; iter < 20; ++iter) {
        Subspace u = random_subspace(gen, 4, 5, 3);
        Subspace v = random_subspace(gen, 4, 5, 3);
        Subspace w = meet(u, v);
        CHECK(u.contains(w));
        CHECK(v.contains(w));
    }
}

TEST_CASE("kernel of a matrix") {
    const int n = 4;
    ScalarMatrix a(n, 1, 2);
    a.at(0, 0) = Cyclotomic::one(n);
    a.at(0, 1) = Cyclotomic::one(n);
    Subspace k = kernel(a);
    CHECK(k.dim() == 1);
    CHECK(k.contains_vector(qvec(n, {1, -1})));
    CHECK(matrix_rank(a) == 1);
}

TEST_CASE("matrix inverse round trip") {
    std::mt19937 gen(404);
    const int n = 4;
    for (int iter = 0; iter < 10; ++iter) {
        ScalarMatrix a(n, 4, 4);
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 4; ++c) a.at(r, c) = testsupport::random_cyclotomic(gen, n);
        auto inv = a.inverse();
        if (!inv.has_value()) continue;
        CHECK(a * *inv == ScalarMatrix::identity(n, 4));
        CHECK(*inv * a == ScalarMatrix::identity(n, 4));
    }
    CHECK_FALSE(ScalarMatrix(n, 3, 3).inverse().has_value());
}

TEST_CASE("row solver recovers coordinates") {
    const int n = 4;
    std::vector<CycVec> rows{qvec(n, {1, 2, 0}), qvec(n, {0, 1, 1})};
    RowSolver solver(n, 3, rows);
    CycVec target = qvec(n, {2, 5, 1});  // 2*r0 + 1*r1
    auto coords = solver.coords(target);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Cyclotomic(n, Rational(2)));
    CHECK((*coords)[1] == Cyclotomic(n, Rational(1)));
    CHECK_FALSE(solver.coords(qvec(n, {0, 0, 1})).has_value());
    CHECK_THROWS_AS(RowSolver(n, 2, std::vector<CycVec>{qvec(n, {1, 1}), qvec(n, {2, 2})}), error);
}
