#pragma once

#include <vector>

#include "gradekit/rational.hpp"

namespace gradekit {

/// Dense integer matrix for exponent-lattice work.
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Integer(0)) {}

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Integer& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Integer& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        require(a.cols_ == b.rows_, "dimension mismatch in product");
        IntMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Determinant by fraction-free (Bareiss) elimination; square only.
    Integer det() const {
        require(rows_ == cols_, "determinant of a non-square matrix");
        const size_t n = rows_;
        if (n == 0) return 1;
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
        Integer prev(1);
        int sgn = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            if (a[k][k] == 0) {
                size_t p = k + 1;
                while (p < n && a[p][k] == 0) ++p;
                if (p == n) return 0;
                std::swap(a[k], a[p]);
                sgn = -sgn;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j) {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            prev = a[k][k];
        }
        return sgn > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
    }

private:
    size_t rows_, cols_;
    std::vector<Integer> e_;
};

struct SmithResult {
    IntMatrix u, s, v;  // u * a * v = s, u and v unimodular
};

/// Smith normal form with transform tracking. S is diagonal, entries
/// nonnegative with d1 | d2 | ... .
inline SmithResult smith_normal_form(const IntMatrix& a0) {
    const size_t m = a0.rows(), n = a0.cols();
    SmithResult res{IntMatrix::identity(m), a0, IntMatrix::identity(n)};
    IntMatrix& a = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto swap_rows = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto addmul_row = [&](size_t dst, size_t src, const Integer& q) {
        if (q == 0) return;
        for (size_t c = 0; c < n; ++c) a.at(dst, c) += q * a.at(src, c);
        for (size_t c = 0; c < m; ++c) u.at(dst, c) += q * u.at(src, c);
    };
    auto addmul_col = [&](size_t dst, size_t src, const Integer& q) {
        if (q == 0) return;
        for (size_t r = 0; r < m; ++r) a.at(r, dst) += q * a.at(r, src);
        for (size_t r = 0; r < n; ++r) v.at(r, dst) += q * v.at(r, src);
    };
    auto negate_row = [&](size_t i) {
        for (size_t c = 0; c < n; ++c) a.at(i, c) = -a.at(i, c);
        for (size_t c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
    };

    const size_t steps = std::min(m, n);
    for (size_t t = 0; t < steps; ++t) {
        // locate smallest nonzero entry in the trailing block
        bool found = false;
        size_t pr = t, pc = t;
        Integer best(0);
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                Integer mag = abs(a.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                addmul_row(i, t, Integer(-q));
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);  // remainder is strictly smaller
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                addmul_col(j, t, Integer(-q));
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility condition on the rest of the block
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n && divides; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addmul_row(t, i, Integer(1));
                        divides = false;
                    }
                }
            if (divides) break;
        }
        if (a.at(t, t) < 0) negate_row(t);
    }
    return res;
}

} // namespace gradekit
