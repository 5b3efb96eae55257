#pragma once

#include <optional>
#include <vector>

#include "gradekit/cyclotomic.hpp"

namespace gradekit {

using CycVec = std::vector<Cyclotomic>;

inline bool vec_is_zero(const CycVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

inline CycVec vec_scaled(const CycVec& v, const Cyclotomic& s) {
    CycVec r = v;
    for (auto& c : r) c = c * s;
    return r;
}

inline void vec_axpy(CycVec& dst, const Cyclotomic& s, const CycVec& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

/// Dense matrix over a fixed cyclotomic field. Immutable use is intended;
/// mutation is limited to construction-time filling via at().
class ScalarMatrix {
public:
    ScalarMatrix(int conductor, size_t rows, size_t cols)
        : conductor_(conductor), rows_(rows), cols_(cols), e_(rows * cols, Cyclotomic(conductor)) {}

    static ScalarMatrix identity(int conductor, size_t n) {
        ScalarMatrix m(conductor, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(conductor);
        return m;
    }

    static ScalarMatrix from_rows(int conductor, const std::vector<CycVec>& rows) {
        size_t cols = rows.empty() ? 0 : rows.front().size();
        ScalarMatrix m(conductor, rows.size(), cols);
        for (size_t r = 0; r < rows.size(); ++r) {
            require(rows[r].size() == cols, "ragged rows");
            for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    int conductor() const { return conductor_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Cyclotomic& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    Cyclotomic& at(size_t r, size_t c) {
        require(e_[r * cols_ + c].conductor() == conductor_, "conductor mismatch");
        return e_[r * cols_ + c];
    }

    CycVec row(size_t r) const { return CycVec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_); }

    bool is_zero() const {
        for (const auto& c : e_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    ScalarMatrix transpose() const {
        ScalarMatrix t(conductor_, cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    ScalarMatrix conj_entries() const {
        ScalarMatrix t(conductor_, rows_, cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(r, c) = at(r, c).conj();
        return t;
    }

    Cyclotomic trace() const {
        Cyclotomic t(conductor_);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
        a.check_shape(b);
        ScalarMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
        a.check_shape(b);
        ScalarMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        require(a.conductor_ == b.conductor_, "conductor mismatch");
        require(a.cols_ == b.rows_, "dimension mismatch in product");
        ScalarMatrix r(a.conductor_, a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Cyclotomic& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend ScalarMatrix operator*(const Cyclotomic& s, const ScalarMatrix& a) {
        ScalarMatrix r = a;
        for (auto& c : r.e_) c = s * c;
        return r;
    }
    friend ScalarMatrix operator-(const ScalarMatrix& a) { return Cyclotomic(a.conductor_, Rational(-1)) * a; }

    CycVec apply(const CycVec& v) const {
        require(v.size() == cols_, "dimension mismatch in apply");
        CycVec r(rows_, Cyclotomic(conductor_));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                r[i] += at(i, j) * v[j];
            }
        return r;
    }

    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<ScalarMatrix> inverse() const {
        require(is_square(), "inverse of a non-square matrix");
        const size_t n = rows_;
        std::vector<CycVec> a(n), b(n);
        for (size_t i = 0; i < n; ++i) {
            a[i] = row(i);
            b[i] = CycVec(n, Cyclotomic(conductor_));
            b[i][i] = Cyclotomic::one(conductor_);
        }
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a[piv][col].is_zero()) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
            Cyclotomic inv = a[col][col].inverse();
            a[col] = vec_scaled(a[col], inv);
            b[col] = vec_scaled(b[col], inv);
            for (size_t r = 0; r < n; ++r) {
                if (r == col || a[r][col].is_zero()) continue;
                Cyclotomic f = -a[r][col];
                vec_axpy(a[r], f, a[col]);
                vec_axpy(b[r], f, b[col]);
            }
        }
        return from_rows(conductor_, b);
    }

    CycVec flatten() const { return e_; }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.conductor_ != b.conductor_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        return a.e_ == b.e_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    bool is_symmetric() const { return *this == transpose(); }
    bool is_antisymmetric() const { return *this == -transpose(); }

private:
    void check_shape(const ScalarMatrix& o) const {
        require(conductor_ == o.conductor_, "conductor mismatch");
        require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch");
    }

    int conductor_;
    size_t rows_, cols_;
    std::vector<Cyclotomic> e_;
};

/// Commutator XY - YX.
inline ScalarMatrix commutator(const ScalarMatrix& x, const ScalarMatrix& y) { return x * y - y * x; }

} // namespace gradekit
