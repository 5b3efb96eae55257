#pragma once

#include <memory>
#include <string>

#include "gradekit/subspace.hpp"

namespace gradekit {

class MatrixLieAlgebra;
using AlgebraPtr = std::shared_ptr<const MatrixLieAlgebra>;

enum class FormKind { symmetric, antisymmetric };

/// Matrix Lie algebra with an explicit ordered basis of m x m matrices and
/// the exact structure tensor [X_a, X_b] = sum_d c_{ab}^d X_d.
class MatrixLieAlgebra {
public:
    /// Builds the algebra from a basis; rejects dependent bases and bases
    /// that are not closed under the commutator.
    static AlgebraPtr from_basis(std::string name, size_t ambient, std::vector<ScalarMatrix> basis) {
        require(!basis.empty(), "empty basis");
        int conductor = basis.front().conductor();
        for (const auto& b : basis) {
            require(b.conductor() == conductor, "conductor mismatch in basis");
            require(b.rows() == ambient && b.cols() == ambient, "basis matrices must be ambient x ambient");
        }
        auto alg = std::shared_ptr<MatrixLieAlgebra>(new MatrixLieAlgebra);
        alg->name_ = std::move(name);
        alg->conductor_ = conductor;
        alg->ambient_ = ambient;
        alg->basis_ = std::move(basis);
        std::vector<CycVec> flat;
        flat.reserve(alg->basis_.size());
        for (const auto& b : alg->basis_) flat.push_back(b.flatten());
        try {
            alg->solver_ = std::make_unique<RowSolver>(conductor, ambient * ambient, flat);
        } catch (const error&) {
            throw error("basis matrices are linearly dependent");
        }
        const size_t dim = alg->basis_.size();
        alg->struct_.assign(dim, std::vector<CycVec>(dim));
        for (size_t a = 0; a < dim; ++a) {
            alg->struct_[a][a] = CycVec(dim, Cyclotomic(conductor));
            for (size_t b = a + 1; b < dim; ++b) {
                ScalarMatrix br = commutator(alg->basis_[a], alg->basis_[b]);
                auto coords = alg->solver_->coords(br.flatten());
                require(coords.has_value(), "basis is not closed under the bracket");
                alg->struct_[a][b] = *coords;
                CycVec neg = *coords;
                for (auto& c : neg) c = -c;
                alg->struct_[b][a] = std::move(neg);
            }
        }
        return alg;
    }

    /// Traceless m x m matrices; basis: off-diagonal units in row-major
    /// order, then the diagonal differences E_kk - E_{k+1,k+1}.
    static AlgebraPtr sl(size_t m, int conductor) {
        require(m >= 2, "sl(m) needs m >= 2");
        std::vector<ScalarMatrix> basis;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                ScalarMatrix e(conductor, m, m);
                e.at(i, j) = Cyclotomic::one(conductor);
                basis.push_back(std::move(e));
            }
        for (size_t k = 0; k + 1 < m; ++k) {
            ScalarMatrix h(conductor, m, m);
            h.at(k, k) = Cyclotomic::one(conductor);
            h.at(k + 1, k + 1) = Cyclotomic(conductor, Rational(-1));
            basis.push_back(std::move(h));
        }
        return from_basis("sl(" + std::to_string(m) + ")", m, std::move(basis));
    }

    static AlgebraPtr orthogonal(const ScalarMatrix& k) { return form_algebra(k, FormKind::symmetric); }
    static AlgebraPtr symplectic(const ScalarMatrix& k) { return form_algebra(k, FormKind::antisymmetric); }

    const std::string& name() const { return name_; }
    int conductor() const { return conductor_; }
    size_t ambient_size() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<ScalarMatrix>& basis() const { return basis_; }
    const CycVec& structure(size_t a, size_t b) const { return struct_[a][b]; }
    const std::optional<std::pair<ScalarMatrix, FormKind>>& defining_form() const { return form_; }

    /// Coordinates of an ambient matrix over the basis, if it lies in the span.
    std::optional<CycVec> coordinates(const ScalarMatrix& x) const {
        require(x.rows() == ambient_ && x.cols() == ambient_, "wrong ambient size");
        return solver_->coords(x.flatten());
    }

    ScalarMatrix matrix_of(const CycVec& coords) const {
        require(coords.size() == dim(), "coordinate length mismatch");
        ScalarMatrix m(conductor_, ambient_, ambient_);
        for (size_t a = 0; a < coords.size(); ++a) {
            if (coords[a].is_zero()) continue;
            m = m + coords[a] * basis_[a];
        }
        return m;
    }

    CycVec bracket_coords(const CycVec& x, const CycVec& y) const {
        CycVec out(dim(), Cyclotomic(conductor_));
        for (size_t a = 0; a < dim(); ++a) {
            if (x[a].is_zero()) continue;
            for (size_t b = 0; b < dim(); ++b) {
                if (y[b].is_zero()) continue;
                Cyclotomic f = x[a] * y[b];
                vec_axpy(out, f, struct_[a][b]);
            }
        }
        return out;
    }

    /// Exact check of antisymmetry and the Jacobi identity on the tensor.
    bool verify_structure() const {
        const size_t d = dim();
        for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b)
                for (size_t i = 0; i < d; ++i)
                    if (struct_[a][b][i] != -struct_[b][a][i]) return false;
        for (size_t a = 0; a < d; ++a)
            for (size_t b = a + 1; b < d; ++b)
                for (size_t c = b + 1; c < d; ++c) {
                    CycVec s = bracket_coords(struct_[a][b], unit(c));
                    vec_axpy(s, Cyclotomic::one(conductor_), bracket_coords(struct_[b][c], unit(a)));
                    vec_axpy(s, Cyclotomic::one(conductor_), bracket_coords(struct_[c][a], unit(b)));
                    if (!vec_is_zero(s)) return false;
                }
        return true;
    }

    CycVec unit(size_t a) const {
        CycVec v(dim(), Cyclotomic(conductor_));
        v[a] = Cyclotomic::one(conductor_);
        return v;
    }

    /// True when this is a full traceless matrix algebra of its ambient size.
    bool is_special_linear() const {
        if (dim() != ambient_ * ambient_ - 1) return false;
        for (const auto& b : basis_)
            if (!b.trace().is_zero()) return false;
        return true;
    }

private:
    MatrixLieAlgebra() = default;

    static AlgebraPtr form_algebra(const ScalarMatrix& k, FormKind kind) {
        require(k.is_square(), "defining form must be square");
        const size_t m = k.rows();
        const int conductor = k.conductor();
        if (kind == FormKind::symmetric) require(k.is_symmetric(), "K must satisfy K = K^T");
        if (kind == FormKind::antisymmetric) require(k.is_antisymmetric(), "K must satisfy K = -K^T");
        require(k.inverse().has_value(), "defining form is singular");
        // solution space of X^T K + K X = 0 in lexicographic variable order
        ScalarMatrix sys(conductor, m * m, m * m);
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c)
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j) {
                        Cyclotomic coeff(conductor);
                        if (j == r) coeff += k.at(i, c);
                        if (j == c) coeff += k.at(r, i);
                        sys.at(r * m + c, i * m + j) = coeff;
                    }
        Subspace sol = kernel(sys);
        require(sol.dim() > 0, "defining equations have no nonzero solutions");
        std::vector<ScalarMatrix> basis;
        for (const auto& v : sol.basis()) {
            ScalarMatrix x(conductor, m, m);
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) x.at(i, j) = v[i * m + j];
            basis.push_back(std::move(x));
        }
        std::string nm = (kind == FormKind::symmetric ? "o_K(" : "sp_K(") + std::to_string(m) + ")";
        auto alg = from_basis(nm, m, std::move(basis));
        const_cast<MatrixLieAlgebra&>(*alg).form_ = std::make_pair(k, kind);
        return alg;
    }

    std::string name_;
    int conductor_ = 1;
    size_t ambient_ = 0;
    std::vector<ScalarMatrix> basis_;
    std::unique_ptr<RowSolver> solver_;
    std::vector<std::vector<CycVec>> struct_;
    std::optional<std::pair<ScalarMatrix, FormKind>> form_;
};

inline bool same_algebra(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
    if (&a == &b) return true;
    if (a.conductor() != b.conductor() || a.ambient_size() != b.ambient_size() || a.dim() != b.dim()) return false;
    return a.basis() == b.basis();
}

struct Element {
    AlgebraPtr algebra;
    CycVec coords;
};

inline Element element(AlgebraPtr algebra, CycVec coords) {
    require(coords.size() == algebra->dim(), "coordinate length mismatch");
    return Element{std::move(algebra), std::move(coords)};
}

inline Element bracket(const Element& x, const Element& y) {
    require(same_algebra(*x.algebra, *y.algebra), "elements of different algebras");
    return Element{x.algebra, x.algebra->bracket_coords(x.coords, y.coords)};
}

/// Gram matrix of the Killing form B(X_a, X_b) = tr(ad X_a . ad X_b).
inline ScalarMatrix killing_matrix(const MatrixLieAlgebra& l) {
    const size_t d = l.dim();
    ScalarMatrix b(l.conductor(), d, d);
    for (size_t a = 0; a < d; ++a)
        for (size_t a2 = a; a2 < d; ++a2) {
            Cyclotomic t(l.conductor());
            for (size_t c = 0; c < d; ++c) {
                const CycVec& ac = l.structure(a, c);
                for (size_t e = 0; e < d; ++e) {
                    if (ac[e].is_zero()) continue;
                    const Cyclotomic& other = l.structure(a2, e)[c];
                    if (other.is_zero()) continue;
                    t += ac[e] * other;
                }
            }
            b.at(a, a2) = t;
            b.at(a2, a) = t;
        }
    return b;
}

namespace detail {

inline ScalarMatrix ad_matrix(const MatrixLieAlgebra& l, size_t a) {
    const size_t d = l.dim();
    ScalarMatrix m(l.conductor(), d, d);
    for (size_t b = 0; b < d; ++b) {
        const CycVec& col = l.structure(a, b);
        for (size_t r = 0; r < d; ++r) m.at(r, b) = col[r];
    }
    return m;
}

// Basis of {phi in End(L) : phi ad_a = ad_a phi for all a}, flattened row-major.
inline std::vector<CycVec> centroid_basis(const MatrixLieAlgebra& l) {
    const size_t d = l.dim();
    const int n = l.conductor();
    std::vector<ScalarMatrix> ads;
    ads.reserve(d);
    for (size_t a = 0; a < d; ++a) ads.push_back(ad_matrix(l, a));

    // commutant of the first ad
    ScalarMatrix sys(n, d * d, d * d);
    const ScalarMatrix& a0 = ads[0];
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) {
                    Cyclotomic coeff(n);
                    if (i == r) coeff += a0.at(j, c);
                    if (j == c) coeff -= a0.at(r, i);
                    sys.at(r * d + c, i * d + j) = coeff;
                }
    std::vector<CycVec> cur = kernel(sys).basis();

    for (size_t g = 1; g < d && !cur.empty(); ++g) {
        const ScalarMatrix& ag = ads[g];
        ScalarMatrix sm(n, d * d, cur.size());
        for (size_t c = 0; c < cur.size(); ++c) {
            ScalarMatrix phi(n, d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) phi.at(i, j) = cur[c][i * d + j];
            ScalarMatrix com = phi * ag - ag * phi;
            CycVec flat = com.flatten();
            for (size_t r = 0; r < d * d; ++r) sm.at(r, c) = flat[r];
        }
        Subspace ker = kernel(sm);
        std::vector<CycVec> next;
        for (const auto& k : ker.basis()) {
            CycVec v(d * d, Cyclotomic(n));
            for (size_t c = 0; c < cur.size(); ++c) {
                if (k[c].is_zero()) continue;
                vec_axpy(v, k[c], cur[c]);
            }
            next.push_back(std::move(v));
        }
        cur = Subspace::canonicalize(n, d * d, next).basis();
    }
    return cur;
}

// Rational roots of a monic-over-Q polynomial given by exact coefficients,
// lowest degree first. Throws when a non-rational coefficient appears.
inline std::vector<Rational> rational_roots(const std::vector<Cyclotomic>& coeffs) {
    std::vector<Rational> rat;
    for (const auto& c : coeffs) {
        require(c.is_rational(), "polynomial has non-rational coefficients");
        rat.push_back(c.rational_value());
    }
    // clear denominators
    Integer lcm(1);
    for (const auto& r : rat) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
        lcm = lcm / g * r.get_den();
    }
    std::vector<Integer> z;
    for (const auto& r : rat) {
        Rational scaled = r * Rational(lcm);
        scaled.canonicalize();
        z.push_back(scaled.get_num());
    }
    while (!z.empty() && z.back() == 0) z.pop_back();
    std::vector<Rational> roots;
    // strip zero roots
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    std::vector<Integer> p(z.begin() + low, z.end());
    if (p.size() <= 1) return roots;
    auto divisors = [](Integer v) {
        std::vector<Integer> out;
        v = abs(v);
        for (Integer i(1); i * i <= v; ++i) {
            if (v % i != 0) continue;
            out.push_back(i);
            if (i * i != v) out.push_back(v / i);
        }
        return out;
    };
    auto eval_zero = [&](const Rational& x) {
        Rational acc(0), pw(1);
        for (const auto& c : p) {
            acc += Rational(c) * pw;
            pw *= x;
        }
        return acc == 0;
    };
    for (const Integer& num : divisors(p.front()))
        for (const Integer& den : divisors(p.back()))
            for (int s : {1, -1}) {
                Rational cand(s * num, den);
                cand.canonicalize();
                bool seen = false;
                for (const auto& r : roots) seen = seen || r == cand;
                if (!seen && eval_zero(cand)) roots.push_back(cand);
            }
    return roots;
}

// Minimal polynomial coefficients (lowest degree first, monic) of a square matrix.
inline std::vector<Cyclotomic> minimal_polynomial(const ScalarMatrix& m) {
    const int n = m.conductor();
    const size_t d = m.rows();
    std::vector<CycVec> powers;
    ScalarMatrix p = ScalarMatrix::identity(n, d);
    for (size_t k = 0;; ++k) {
        CycVec flat = p.flatten();
        std::vector<CycVec> rows = powers;
        Subspace span = Subspace::canonicalize(n, d * d, rows);
        if (span.dim() == powers.size() && span.contains_vector(flat) && k > 0) {
            RowSolver solver(n, d * d, powers);
            auto coords = solver.coords(flat);
            std::vector<Cyclotomic> out(k + 1, Cyclotomic(n));
            for (size_t i = 0; i < k; ++i) out[i] = -(*coords)[i];
            out[k] = Cyclotomic::one(n);
            return out;
        }
        powers.push_back(flat);
        p = p * m;
        require(k <= d, "minimal polynomial search exceeded dimension");
    }
}

} // namespace detail

/// Splits a semisimple algebra into its simple ideals, each returned as a
/// standalone subalgebra with an induced canonical basis.
inline std::vector<AlgebraPtr> ideal_decomposition(const AlgebraPtr& l) {
    require(matrix_rank(killing_matrix(*l)) == l->dim(),
            "ideal decomposition requires a nondegenerate Killing form");

    std::vector<AlgebraPtr> out;
    std::vector<AlgebraPtr> stack{l};
    while (!stack.empty()) {
        AlgebraPtr cur = stack.back();
        stack.pop_back();
        auto centroid = detail::centroid_basis(*cur);
        if (centroid.size() <= 1) {
            out.push_back(cur);
            continue;
        }
        const size_t d = cur->dim();
        const int n = cur->conductor();
        // pick a centroid element that is not a multiple of the identity
        std::optional<ScalarMatrix> psi;
        for (const auto& v : centroid) {
            ScalarMatrix phi(n, d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) phi.at(i, j) = v[i * d + j];
            ScalarMatrix diff = phi - phi.at(0, 0) * ScalarMatrix::identity(n, d);
            if (!diff.is_zero()) {
                psi = phi;
                break;
            }
        }
        require(psi.has_value(), "centroid has no splitting element");
        auto roots = detail::rational_roots(detail::minimal_polynomial(*psi));
        std::vector<Subspace> eig;
        size_t total = 0;
        for (const auto& lam : roots) {
            Subspace s = kernel(*psi - Cyclotomic(n, lam) * ScalarMatrix::identity(n, d));
            if (s.dim() == 0) continue;
            total += s.dim();
            eig.push_back(std::move(s));
        }
        require(total == d, "centroid element does not split over the working field");
        for (const auto& s : eig) {
            std::vector<ScalarMatrix> mats;
            for (const auto& v : s.basis()) mats.push_back(cur->matrix_of(v));
            stack.push_back(MatrixLieAlgebra::from_basis(cur->name() + "#", cur->ambient_size(), mats));
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgebraPtr& a, const AlgebraPtr& b) {
        if (a->dim() != b->dim()) return a->dim() < b->dim();
        const auto &ba = a->basis(), &bb = b->basis();
        for (size_t i = 0; i < ba.size(); ++i)
            for (size_t r = 0; r < ba[i].rows(); ++r)
                for (size_t c = 0; c < ba[i].cols(); ++c) {
                    int cmp = Cyclotomic::compare(ba[i].at(r, c), bb[i].at(r, c));
                    if (cmp != 0) return cmp < 0;
                }
        return false;
    });
    for (size_t i = 0; i < out.size(); ++i) {
        // stable, human-readable ideal names
        auto renamed = MatrixLieAlgebra::from_basis(l->name() + "#" + std::to_string(i + 1), out[i]->ambient_size(),
                                                    out[i]->basis());
        out[i] = renamed;
    }
    return out;
}

} // namespace gradekit
