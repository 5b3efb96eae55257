#pragma once

#include <algorithm>
#include <optional>

#include "gradekit/matrix.hpp"

namespace gradekit {

namespace detail {

struct Rref {
    std::vector<CycVec> rows;    // reduced row-echelon, no zero rows
    std::vector<size_t> pivots;  // pivot column per row, strictly increasing
};

inline Rref rref(std::vector<CycVec> rows, size_t width, int conductor) {
    Rref out;
    size_t lead = 0;
    // forward elimination with immediate back-substitution
    std::vector<CycVec> work = std::move(rows);
    size_t r = 0;
    for (size_t col = 0; col < width && r < work.size(); ++col) {
        size_t piv = r;
        while (piv < work.size() && work[piv][col].is_zero()) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        Cyclotomic inv = work[r][col].inverse();
        work[r] = vec_scaled(work[r], inv);
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == r || work[i][col].is_zero()) continue;
            Cyclotomic f = -work[i][col];
            vec_axpy(work[i], f, work[r]);
        }
        out.pivots.push_back(col);
        ++r;
        lead = col + 1;
    }
    (void)lead;
    (void)conductor;
    work.resize(r);
    out.rows = std::move(work);
    return out;
}

} // namespace detail

/// Subspace of F^ambient in a unique reduced row-echelon basis; equality of
/// subspaces is row-wise comparison of the canonical bases.
class Subspace {
public:
    Subspace(int conductor, size_t ambient) : conductor_(conductor), ambient_(ambient) {}

    static Subspace canonicalize(int conductor, size_t ambient, const std::vector<CycVec>& vectors) {
        for (const auto& v : vectors) {
            require(v.size() == ambient, "vector length does not match ambient dimension");
            for (const auto& c : v) require(c.conductor() == conductor, "conductor mismatch");
        }
        auto red = detail::rref(vectors, ambient, conductor);
        Subspace s(conductor, ambient);
        s.basis_ = std::move(red.rows);
        s.pivots_ = std::move(red.pivots);
        return s;
    }

    static Subspace zero(int conductor, size_t ambient) { return Subspace(conductor, ambient); }

    static Subspace full(int conductor, size_t ambient) {
        std::vector<CycVec> rows(ambient, CycVec(ambient, Cyclotomic(conductor)));
        for (size_t i = 0; i < ambient; ++i) rows[i][i] = Cyclotomic::one(conductor);
        return canonicalize(conductor, ambient, rows);
    }

    int conductor() const { return conductor_; }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<CycVec>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }

    /// Residual of v after eliminating against the canonical basis.
    CycVec reduce(CycVec v) const {
        for (size_t r = 0; r < basis_.size(); ++r) {
            const Cyclotomic& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            vec_axpy(v, -c, basis_[r]);
        }
        return v;
    }

    bool contains_vector(const CycVec& v) const {
        require(v.size() == ambient_, "vector length does not match ambient dimension");
        return vec_is_zero(reduce(v));
    }

    bool contains(const Subspace& other) const {
        check_ambient(other);
        for (const auto& v : other.basis_)
            if (!contains_vector(v)) return false;
        return true;
    }

    /// Coordinates of v in the canonical basis, if v lies in the subspace.
    std::optional<CycVec> coords_of(const CycVec& v) const {
        CycVec coords(basis_.size(), Cyclotomic(conductor_));
        CycVec work = v;
        for (size_t r = 0; r < basis_.size(); ++r) {
            const Cyclotomic& c = work[pivots_[r]];
            if (c.is_zero()) continue;
            coords[r] = c;
            vec_axpy(work, -c, basis_[r]);
        }
        if (!vec_is_zero(work)) return std::nullopt;
        return coords;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.conductor_ != b.conductor_ || a.ambient_ != b.ambient_) return false;
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Deterministic order: by dimension, then lexicographic canonical basis.
    static int compare(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
        if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
        for (size_t r = 0; r < a.basis_.size(); ++r)
            for (size_t c = 0; c < a.ambient_; ++c) {
                int cmp = Cyclotomic::compare(a.basis_[r][c], b.basis_[r][c]);
                if (cmp != 0) return cmp;
            }
        return 0;
    }

private:
    void check_ambient(const Subspace& o) const {
        require(conductor_ == o.conductor_, "conductor mismatch");
        require(ambient_ == o.ambient_, "ambient dimension mismatch");
    }

    friend Subspace join(const Subspace&, const Subspace&);
    friend Subspace meet(const Subspace&, const Subspace&);

    int conductor_;
    size_t ambient_;
    std::vector<CycVec> basis_;
    std::vector<size_t> pivots_;
};

inline Subspace join(const Subspace& u, const Subspace& v) {
    u.check_ambient(v);
    std::vector<CycVec> rows = u.basis_;
    rows.insert(rows.end(), v.basis_.begin(), v.basis_.end());
    return Subspace::canonicalize(u.conductor_, u.ambient_, rows);
}

/// Right kernel of A as a canonical subspace of F^cols.
inline Subspace kernel(const ScalarMatrix& a) {
    const size_t n = a.cols();
    std::vector<CycVec> rows;
    rows.reserve(a.rows());
    for (size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    auto red = detail::rref(rows, n, a.conductor());
    std::vector<bool> is_pivot(n, false);
    for (size_t p : red.pivots) is_pivot[p] = true;
    std::vector<CycVec> out;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        CycVec v(n, Cyclotomic(a.conductor()));
        v[f] = Cyclotomic::one(a.conductor());
        for (size_t r = 0; r < red.rows.size(); ++r) v[red.pivots[r]] = -red.rows[r][f];
        out.push_back(std::move(v));
    }
    return Subspace::canonicalize(a.conductor(), n, out);
}

inline Subspace meet(const Subspace& u, const Subspace& v) {
    u.check_ambient(v);
    // x = sum a_i u_i = sum b_j v_j; solve for (a, b) in the kernel of [U^T | -V^T]
    const size_t du = u.dim(), dv = v.dim();
    if (du == 0 || dv == 0) return Subspace::zero(u.conductor_, u.ambient_);
    ScalarMatrix sys(u.conductor_, u.ambient_, du + dv);
    for (size_t i = 0; i < du; ++i)
        for (size_t r = 0; r < u.ambient_; ++r) sys.at(r, i) = u.basis_[i][r];
    for (size_t j = 0; j < dv; ++j)
        for (size_t r = 0; r < u.ambient_; ++r) sys.at(r, du + j) = -v.basis_[j][r];
    Subspace ker = kernel(sys);
    std::vector<CycVec> vecs;
    for (const auto& k : ker.basis()) {
        CycVec x(u.ambient_, Cyclotomic(u.conductor_));
        for (size_t i = 0; i < du; ++i) vec_axpy(x, k[i], u.basis_[i]);
        vecs.push_back(std::move(x));
    }
    return Subspace::canonicalize(u.conductor_, u.ambient_, vecs);
}

inline size_t matrix_rank(const ScalarMatrix& a) {
    std::vector<CycVec> rows;
    rows.reserve(a.rows());
    for (size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    return detail::rref(rows, a.cols(), a.conductor()).rows.size();
}

/// Solver for coordinates with respect to a fixed list of independent rows
/// (not necessarily echelon). Keeps the transform T with R = T * rows.
class RowSolver {
public:
    RowSolver(int conductor, size_t width, const std::vector<CycVec>& raw_rows)
        : conductor_(conductor), width_(width) {
        const size_t n = raw_rows.size();
        rows_ = raw_rows;
        t_.assign(n, CycVec(n, Cyclotomic(conductor)));
        for (size_t i = 0; i < n; ++i) t_[i][i] = Cyclotomic::one(conductor);
        size_t r = 0;
        for (size_t col = 0; col < width_ && r < n; ++col) {
            size_t piv = r;
            while (piv < n && rows_[piv][col].is_zero()) ++piv;
            if (piv == n) continue;
            std::swap(rows_[r], rows_[piv]);
            std::swap(t_[r], t_[piv]);
            Cyclotomic inv = rows_[r][col].inverse();
            rows_[r] = vec_scaled(rows_[r], inv);
            t_[r] = vec_scaled(t_[r], inv);
            for (size_t i = 0; i < n; ++i) {
                if (i == r || rows_[i][col].is_zero()) continue;
                Cyclotomic f = -rows_[i][col];
                vec_axpy(rows_[i], f, rows_[r]);
                vec_axpy(t_[i], f, t_[r]);
            }
            pivots_.push_back(col);
            ++r;
        }
        require(r == n, "rows are linearly dependent");
    }

    /// Coordinates c with sum_i c_i * raw_rows[i] = v, if solvable.
    std::optional<CycVec> coords(const CycVec& v) const {
        const size_t n = rows_.size();
        CycVec k(n, Cyclotomic(conductor_));
        CycVec work = v;
        for (size_t r = 0; r < n; ++r) {
            const Cyclotomic& c = work[pivots_[r]];
            if (c.is_zero()) continue;
            k[r] = c;
            vec_axpy(work, -c, rows_[r]);
        }
        if (!vec_is_zero(work)) return std::nullopt;
        CycVec out(n, Cyclotomic(conductor_));
        for (size_t r = 0; r < n; ++r) {
            if (k[r].is_zero()) continue;
            vec_axpy(out, k[r], t_[r]);
        }
        return out;
    }

private:
    int conductor_;
    size_t width_;
    std::vector<CycVec> rows_;
    std::vector<CycVec> t_;
    std::vector<size_t> pivots_;
};

} // namespace gradekit
