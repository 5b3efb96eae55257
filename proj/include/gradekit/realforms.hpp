#pragma once

#include <set>

#include "gradekit/gradings.hpp"

namespace gradekit {

namespace detail {

// Rational vectors are handled as conductor-1 cyclotomic vectors so the
// exact subspace machinery can be reused unchanged.
inline CycVec rationals_to_vec(const std::vector<Rational>& v) {
    CycVec out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(Cyclotomic(1, r));
    return out;
}

inline CycVec realify(const CycVec& v, size_t deg) {
    CycVec out;
    out.reserve(v.size() * deg);
    for (const auto& c : v)
        for (size_t k = 0; k < deg; ++k) out.push_back(Cyclotomic(1, c.coeffs()[k]));
    return out;
}

inline CycVec derealify(const CycVec& v, int conductor, size_t deg) {
    CycVec out;
    out.reserve(v.size() / deg);
    for (size_t j = 0; j < v.size(); j += deg) {
        std::vector<Rational> coeffs(deg);
        for (size_t k = 0; k < deg; ++k) coeffs[k] = v[j + k].rational_value();
        out.push_back(Cyclotomic(conductor, std::move(coeffs)));
    }
    return out;
}

} // namespace detail

/// Conjugate-linear involutive bracket-preserving map J = J0 . h, where J0 is
/// entrywise complex conjugation on the matrix realization.
struct AntiAuto {
    AlgebraPtr algebra;
    AlgebraMap h;
    ScalarMatrix semilinear;  // J(x) = semilinear * conj(x) in coordinates
};

inline AntiAuto make_antiauto(const AlgebraPtr& l, const AlgebraMap& h) {
    require(same_algebra(*l, *h.algebra), "map acts on a different algebra");
    const int n = l->conductor();
    require(n == 3 || n == 4 || n == 6,
            "real-form operations need an imaginary quadratic working field (conductor 3, 4 or 6)");
    require(is_automorphism(h), "h is not an automorphism");

    const size_t d = l->dim();
    ScalarMatrix conj_mat(n, d, d);  // coordinate matrix of entrywise conjugation
    for (size_t b = 0; b < d; ++b) {
        auto coords = l->coordinates(l->basis()[b].conj_entries());
        require(coords.has_value(), "entrywise conjugation does not preserve the algebra");
        for (size_t r = 0; r < d; ++r) conj_mat.at(r, b) = (*coords)[r];
    }
    ScalarMatrix m = conj_mat * h.matrix.conj_entries();
    require(m * m.conj_entries() == ScalarMatrix::identity(n, d), "J0.h is not involutive");

    // conjugate-linear bracket preservation on all basis pairs
    auto col = [&](size_t b) {
        CycVec v(d, Cyclotomic(n));
        for (size_t r = 0; r < d; ++r) v[r] = m.at(r, b);
        return v;
    };
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a + 1; b < d; ++b) {
            CycVec br = l->structure(a, b);
            for (auto& c : br) c = c.conj();
            CycVec lhs = m.apply(br);
            CycVec rhs = l->bracket_coords(col(a), col(b));
            require(lhs == rhs, "J does not preserve brackets");
        }
    return AntiAuto{l, h, std::move(m)};
}

/// Real form of the parent: fixed points of J, with a rational structure
/// tensor over the chosen fixed basis.
class RealLieAlgebra {
public:
    RealLieAlgebra(AlgebraPtr parent, std::vector<CycVec> basis,
                   std::vector<std::vector<std::vector<Rational>>> structure)
        : parent_(std::move(parent)), basis_(std::move(basis)), struct_(std::move(structure)) {}

    const AlgebraPtr& parent() const { return parent_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<CycVec>& basis() const { return basis_; }
    const std::vector<Rational>& structure(size_t a, size_t b) const { return struct_[a][b]; }

    std::vector<Rational> bracket_coords(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        std::vector<Rational> out(dim(), Rational(0));
        for (size_t a = 0; a < dim(); ++a) {
            if (x[a] == 0) continue;
            for (size_t b = 0; b < dim(); ++b) {
                if (y[b] == 0) continue;
                Rational f = x[a] * y[b];
                for (size_t c = 0; c < dim(); ++c) out[c] += f * struct_[a][b][c];
            }
        }
        return out;
    }

private:
    AlgebraPtr parent_;
    std::vector<CycVec> basis_;
    std::vector<std::vector<std::vector<Rational>>> struct_;
};

inline RealLieAlgebra fixed_point_form(const AntiAuto& j) {
    const auto& l = *j.algebra;
    const int n = l.conductor();
    const size_t deg = detail::field_table(n)->degree;
    const size_t d = l.dim();

    // J(x) = x as a rational-linear system in the realified coordinates
    ScalarMatrix sys(1, d * deg, d * deg);
    for (size_t jj = 0; jj < d; ++jj)
        for (size_t k = 0; k < deg; ++k) {
            // x = zeta^k e_j
            CycVec unit(d, Cyclotomic(n));
            std::vector<Rational> coeffs(deg, Rational(0));
            coeffs[k] = 1;
            unit[jj] = Cyclotomic(n, coeffs);
            CycVec img = j.semilinear.apply([&] {
                CycVec cc = unit;
                for (auto& c : cc) c = c.conj();
                return cc;
            }());
            for (size_t r = 0; r < d; ++r) img[r] -= unit[r];
            CycVec re = detail::realify(img, deg);
            for (size_t r = 0; r < d * deg; ++r) sys.at(r, jj * deg + k) = re[r];
        }
    Subspace fixed = kernel(sys);
    require(fixed.dim() == d, "fixed-point space has real dimension " + std::to_string(fixed.dim()) +
                                  ", expected " + std::to_string(d));

    std::vector<CycVec> basis;
    for (const auto& v : fixed.basis()) basis.push_back(detail::derealify(v, n, deg));

    // rational structure constants over the fixed basis
    std::vector<CycVec> realified;
    for (const auto& v : fixed.basis()) realified.push_back(v);
    RowSolver solver(1, d * deg, realified);
    std::vector<std::vector<std::vector<Rational>>> tensor(d, std::vector<std::vector<Rational>>(d));
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
            CycVec br = l.bracket_coords(basis[a], basis[b]);
            auto coords = solver.coords(detail::realify(br, deg));
            require(coords.has_value(), "fixed-point space is not closed under the bracket");
            std::vector<Rational> row(d);
            for (size_t c = 0; c < d; ++c) row[c] = (*coords)[c].rational_value();
            tensor[a][b] = std::move(row);
        }
    return RealLieAlgebra(j.algebra, std::move(basis), std::move(tensor));
}

/// Grading of a real form: subspaces are rational (conductor-1) subspaces in
/// the coordinates of the real basis.
struct RealGrading {
    RealLieAlgebra algebra;
    std::vector<GradedSubspace> parts;  // spaces at conductor 1; labels from the complex grading
};

inline VerifyReport verify_real_grading(const RealGrading& g) {
    VerifyReport rep;
    const size_t d = g.algebra.dim();
    size_t total = 0;
    std::vector<CycVec> all;
    for (size_t i = 0; i < g.parts.size(); ++i) {
        const Subspace& s = g.parts[i].space;
        if (s.dim() == 0) rep.fail("subspace " + std::to_string(i) + " is zero");
        total += s.dim();
        for (const auto& v : s.basis()) all.push_back(v);
    }
    if (total != d || Subspace::canonicalize(1, d, all).dim() != d)
        rep.fail("subspaces do not decompose the real form");
    auto bracket_span_real = [&](const Subspace& u, const Subspace& v) {
        std::vector<CycVec> vecs;
        for (const auto& x : u.basis())
            for (const auto& y : v.basis()) {
                std::vector<Rational> xr(d), yr(d);
                for (size_t i = 0; i < d; ++i) xr[i] = x[i].rational_value();
                for (size_t i = 0; i < d; ++i) yr[i] = y[i].rational_value();
                vecs.push_back(detail::rationals_to_vec(g.algebra.bracket_coords(xr, yr)));
            }
        return Subspace::canonicalize(1, d, vecs);
    };
    for (size_t a = 0; a < g.parts.size(); ++a)
        for (size_t b = a; b < g.parts.size(); ++b) {
            Subspace span = bracket_span_real(g.parts[a].space, g.parts[b].space);
            if (span.dim() == 0) continue;
            bool found = false;
            for (const auto& p : g.parts) found = found || p.space.contains(span);
            if (!found)
                rep.fail("bracket of real subspaces " + std::to_string(a) + " and " + std::to_string(b) +
                         " is not contained in a single subspace");
        }
    return rep;
}

/// Builds the real grading determined by a complex grading and an
/// antiautomorphism, when every subspace admits a J-fixed basis.
inline std::optional<RealGrading> fundamental_method(const Grading& g, const AntiAuto& j) {
    require(same_algebra(*g.algebra(), *j.algebra), "grading and antiautomorphism live on different algebras");
    const auto& l = *j.algebra;
    const int n = l.conductor();
    const size_t deg = detail::field_table(n)->degree;
    const size_t d = l.dim();

    RealLieAlgebra real = fixed_point_form(j);
    std::vector<CycVec> realified_basis;
    for (const auto& v : real.basis()) realified_basis.push_back(detail::realify(v, deg));
    RowSolver solver(1, d * deg, realified_basis);

    std::vector<GradedSubspace> parts;
    for (const auto& p : g.parts()) {
        const size_t dj = p.space.dim();
        // x = sum t_i b_i with J(x) = x, solved over the rationals
        ScalarMatrix sys(1, d * deg, dj * deg);
        for (size_t i = 0; i < dj; ++i)
            for (size_t k = 0; k < deg; ++k) {
                std::vector<Rational> coeffs(deg, Rational(0));
                coeffs[k] = 1;
                Cyclotomic zk(n, coeffs);
                CycVec x(d, Cyclotomic(n));
                vec_axpy(x, zk, p.space.basis()[i]);
                CycVec cx = x;
                for (auto& c : cx) c = c.conj();
                CycVec img = j.semilinear.apply(cx);
                for (size_t r = 0; r < d; ++r) img[r] -= x[r];
                CycVec re = detail::realify(img, deg);
                for (size_t r = 0; r < d * deg; ++r) sys.at(r, i * deg + k) = re[r];
            }
        Subspace fixed = kernel(sys);
        if (fixed.dim() != dj) return std::nullopt;
        std::vector<CycVec> rows;
        for (const auto& t : fixed.basis()) {
            // assemble the fixed vector and express it over the real basis
            CycVec x(d, Cyclotomic(n));
            for (size_t i = 0; i < dj; ++i)
                for (size_t k = 0; k < deg; ++k) {
                    const Rational& c = t[i * deg + k].rational_value();
                    if (c == 0) continue;
                    std::vector<Rational> coeffs(deg, Rational(0));
                    coeffs[k] = c;
                    vec_axpy(x, Cyclotomic(n, coeffs), p.space.basis()[i]);
                }
            auto coords = solver.coords(detail::realify(x, deg));
            require(coords.has_value(), "fixed vector does not lie in the real form");
            rows.push_back(*coords);
        }
        parts.push_back(GradedSubspace{p.label, Subspace::canonicalize(1, d, rows)});
    }
    RealGrading out{std::move(real), std::move(parts)};
    require(verify_real_grading(out).ok, "real subspaces do not form a grading");
    return out;
}

namespace detail {

inline std::string matrix_key(const ScalarMatrix& m) {
    std::ostringstream os;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            for (const auto& q : m.at(r, c).coeffs()) os << q.get_str() << ",";
            os << ";";
        }
    return os.str();
}

} // namespace detail

/// Decides whether h lies in the finite group generated by gens (coordinate
/// matrices compared exactly). The grading by gens must have a basis of real
/// matrices and J0.h must be involutive; enumeration stops at order_bound.
inline bool real_basis_method(const std::vector<AlgebraMap>& gens, const AlgebraMap& h, size_t order_bound) {
    require(!gens.empty(), "generator list is empty");
    const AlgebraPtr& l = gens.front().algebra;
    make_antiauto(l, h);  // validates involutivity of J0.h

    std::vector<std::vector<Cyclotomic>> cands;
    for (const auto& g : gens) cands.push_back(default_candidates(g));
    Grading g = grade_by(l, gens, cands);
    for (const auto& p : g.parts())
        for (const auto& v : p.space.basis()) {
            ScalarMatrix m = l->matrix_of(v);
            require(m == m.conj_entries(), "grading does not have a basis of real matrices");
        }

    std::set<std::string> seen;
    std::vector<ScalarMatrix> frontier{ScalarMatrix::identity(l->conductor(), l->dim())};
    seen.insert(detail::matrix_key(frontier.front()));
    while (!frontier.empty()) {
        std::vector<ScalarMatrix> next;
        for (const auto& m : frontier)
            for (const auto& gen : gens) {
                ScalarMatrix prod = m * gen.matrix;
                std::string key = detail::matrix_key(prod);
                if (seen.count(key)) continue;
                if (seen.size() >= order_bound)
                    throw inconclusive_error("generated group exceeds the order bound " +
                                             std::to_string(order_bound));
                seen.insert(key);
                next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return seen.count(detail::matrix_key(h.matrix)) > 0;
}

struct Signature {
    size_t positive = 0;
    size_t negative = 0;
    size_t radical = 0;
};

/// Signature of the real Killing form by exact symmetric reduction.
inline Signature real_killing_signature(const RealLieAlgebra& r) {
    const size_t d = r.dim();
    std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d, Rational(0)));
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a; b < d; ++b) {
            Rational t(0);
            for (size_t c = 0; c < d; ++c) {
                const auto& ac = r.structure(a, c);
                for (size_t e = 0; e < d; ++e) {
                    if (ac[e] == 0) continue;
                    const Rational& other = r.structure(b, e)[c];
                    if (other == 0) continue;
                    t += ac[e] * other;
                }
            }
            gram[a][b] = t;
            gram[b][a] = t;
        }
    Signature sig;
    for (size_t i = 0; i < d; ++i) {
        if (gram[i][i] == 0) {
            size_t pivot = d;
            for (size_t j = i + 1; j < d && pivot == d; ++j)
                if (gram[j][j] != 0) pivot = j;
            if (pivot < d) {
                std::swap(gram[i], gram[pivot]);
                for (size_t r2 = 0; r2 < d; ++r2) std::swap(gram[r2][i], gram[r2][pivot]);
            } else {
                for (size_t j = i + 1; j < d && pivot == d; ++j)
                    if (gram[i][j] != 0) pivot = j;
                if (pivot == d) {
                    sig.radical += 1;
                    continue;
                }
                for (size_t c = 0; c < d; ++c) gram[i][c] += gram[pivot][c];
                for (size_t r2 = 0; r2 < d; ++r2) gram[r2][i] += gram[r2][pivot];
            }
        }
        if (gram[i][i] > 0)
            sig.positive += 1;
        else
            sig.negative += 1;
        for (size_t j = i + 1; j < d; ++j) {
            if (gram[i][j] == 0) continue;
            Rational f = gram[i][j] / gram[i][i];
            for (size_t c = 0; c < d; ++c) gram[j][c] -= f * gram[i][c];
            for (size_t r2 = 0; r2 < d; ++r2) gram[r2][j] -= f * gram[r2][i];
        }
    }
    return sig;
}

} // namespace gradekit
