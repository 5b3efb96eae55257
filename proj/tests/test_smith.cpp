#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace gradekit;
using testsupport::random_int_matrix;

namespace {

// Independent oracle for the invariant factors: d_k = g_k / g_{k-1} with
// g_k the gcd of all k x k minors (g_0 = 1). Practical for small matrices.
Integer minor_det(const IntMatrix& a, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
    const size_t k = rows.size();
    IntMatrix sub(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
    return sub.det();
}

void subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        size_t i = k;
        while (i-- > 0) {
            if (cur[i] != n - k + i) break;
            if (i == 0) return;
        }
        if (cur[i] == n - k + i) return;
        ++cur[i];
        for (size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::vector<Integer> invariant_factors_oracle(const IntMatrix& a) {
    const size_t mx = std::min(a.rows(), a.cols());
    std::vector<Integer> out;
    Integer prev(1);
    for (size_t k = 1; k <= mx; ++k) {
        std::vector<std::vector<size_t>> rsel, csel;
        subsets(a.rows(), k, rsel);
        subsets(a.cols(), k, csel);
        Integer g(0);
        for (const auto& rs : rsel)
            for (const auto& cs : csel) {
                Integer d = abs(minor_det(a, rs, cs));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

} // namespace

TEST_CASE("worked example [[2,4],[6,8]]") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    auto oracle = invariant_factors_oracle(a);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == 2);
    CHECK(oracle[1] == 4);

    SmithResult r = smith_normal_form(a);
    CHECK(r.s.at(0, 0) == 2);
    CHECK(r.s.at(1, 1) == 4);
    CHECK(r.u * a * r.v == r.s);
    CHECK(abs(r.u.det()) == 1);
    CHECK(abs(r.v.det()) == 1);
}

TEST_CASE("identity and zero matrices") {
    IntMatrix id = IntMatrix::identity(3);
    SmithResult r = smith_normal_form(id);
    CHECK(r.s == id);

    IntMatrix z(2, 3);
    SmithResult rz = smith_normal_form(z);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(rz.s.at(i, j) == 0);
}

TEST_CASE("postconditions on random matrices up to 20x20") {
    std::mt19937 gen(505);
    for (int iter = 0; iter < 25; ++iter) {
        size_t rows = 1 + gen() % 20;
        size_t cols = 1 + gen() % 20;
        IntMatrix a = random_int_matrix(gen, rows, cols);
        SmithResult r = smith_normal_form(a);
        CHECK(r.u * a * r.v == r.s);
        CHECK(abs(r.u.det()) == 1);
        CHECK(abs(r.v.det()) == 1);
        Integer prev(0);
        for (size_t i = 0; i < std::min(rows, cols); ++i) {
            for (size_t j = 0; j < cols; ++j)
                if (j != i) CHECK(r.s.at(i, j) == 0);
            const Integer& d = r.s.at(i, i);
            CHECK(d >= 0);
            if (prev != 0) CHECK((d == 0 || d % prev == 0));
            prev = d;
        }
    }
}

TEST_CASE("invariant factors match the minor-gcd oracle on small matrices") {
    std::mt19937 gen(606);
    for (int iter = 0; iter < 20; ++iter) {
        size_t rows = 1 + gen() % 4;
        size_t cols = 1 + gen() % 4;
        IntMatrix a = random_int_matrix(gen, rows, cols, 6);
        SmithResult r = smith_normal_form(a);
        auto oracle = invariant_factors_oracle(a);
        for (size_t i = 0; i < oracle.size(); ++i) CHECK(r.s.at(i, i) == oracle[i]);
        for (size_t i = oracle.size(); i < std::min(rows, cols); ++i) CHECK(r.s.at(i, i) == 0);
    }
}
