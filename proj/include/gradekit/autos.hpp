#pragma once

#include "gradekit/liealg.hpp"

namespace gradekit {

/// Linear operator on an algebra in basis coordinates. Provenance records
/// how it was built ("inner", "outer", "composite", "user").
struct AlgebraMap {
    AlgebraPtr algebra;
    ScalarMatrix matrix;  // dim x dim, acts on coordinates
    std::string provenance;
    std::optional<ScalarMatrix> defining;  // A for inner, K for outer
};

/// Ad_A : X -> A X A^{-1}; A must normalize the algebra.
inline AlgebraMap inner_auto(const AlgebraPtr& l, const ScalarMatrix& a) {
    require(a.rows() == l->ambient_size() && a.cols() == l->ambient_size(), "wrong size for conjugating matrix");
    require(a.conductor() == l->conductor(), "conductor mismatch");
    auto ainv = a.inverse();
    require(ainv.has_value(), "conjugating matrix is singular");
    const size_t d = l->dim();
    ScalarMatrix m(l->conductor(), d, d);
    for (size_t b = 0; b < d; ++b) {
        ScalarMatrix img = a * l->basis()[b] * *ainv;
        auto coords = l->coordinates(img);
        require(coords.has_value(), "matrix does not normalize the algebra");
        for (size_t r = 0; r < d; ++r) m.at(r, b) = (*coords)[r];
    }
    return AlgebraMap{l, std::move(m), "inner", a};
}

/// Out_K : X -> -K X^T K^{-1} for K = K^T or K = -K^T.
inline AlgebraMap outer_auto(const AlgebraPtr& l, const ScalarMatrix& k) {
    require(k.rows() == l->ambient_size() && k.cols() == l->ambient_size(), "wrong size for defining form");
    require(k.conductor() == l->conductor(), "conductor mismatch");
    require(k.is_symmetric() || k.is_antisymmetric(), "K must satisfy K = K^T or K = -K^T");
    auto kinv = k.inverse();
    require(kinv.has_value(), "defining form is singular");
    const size_t d = l->dim();
    ScalarMatrix m(l->conductor(), d, d);
    for (size_t b = 0; b < d; ++b) {
        ScalarMatrix img = -(k * l->basis()[b].transpose() * *kinv);
        auto coords = l->coordinates(img);
        require(coords.has_value(), "outer twist does not preserve the algebra");
        for (size_t r = 0; r < d; ++r) m.at(r, b) = (*coords)[r];
    }
    return AlgebraMap{l, std::move(m), "outer", k};
}

inline AlgebraMap user_map(const AlgebraPtr& l, const ScalarMatrix& m) {
    require(m.rows() == l->dim() && m.cols() == l->dim(), "coordinate matrix must be dim x dim");
    require(m.conductor() == l->conductor(), "conductor mismatch");
    return AlgebraMap{l, m, "user", std::nullopt};
}

inline AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& h) {
    require(same_algebra(*g.algebra, *h.algebra), "maps on different algebras");
    return AlgebraMap{g.algebra, g.matrix * h.matrix, "composite", std::nullopt};
}

inline AlgebraMap identity_map(const AlgebraPtr& l) {
    return AlgebraMap{l, ScalarMatrix::identity(l->conductor(), l->dim()), "user", std::nullopt};
}

/// Exact check of invertibility and g[X_a, X_b] = [g X_a, g X_b] on all pairs.
inline bool is_automorphism(const AlgebraMap& g) {
    if (!g.matrix.inverse().has_value()) return false;
    const auto& l = *g.algebra;
    const size_t d = l.dim();
    std::vector<CycVec> image(d);
    for (size_t b = 0; b < d; ++b) {
        image[b] = CycVec(d, Cyclotomic(l.conductor()));
        for (size_t r = 0; r < d; ++r) image[b][r] = g.matrix.at(r, b);
    }
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a + 1; b < d; ++b) {
            CycVec lhs = g.matrix.apply(l.structure(a, b));
            CycVec rhs = l.bracket_coords(image[a], image[b]);
            for (size_t r = 0; r < d; ++r)
                if (lhs[r] != rhs[r]) return false;
        }
    return true;
}

inline bool commute(const AlgebraMap& g, const AlgebraMap& h) {
    require(same_algebra(*g.algebra, *h.algebra), "maps on different algebras");
    return g.matrix * h.matrix == h.matrix * g.matrix;
}

struct EigenPair {
    Cyclotomic value;
    Subspace space;
};

struct EigenReport {
    std::vector<EigenPair> pairs;
    bool resolved = false;  // true when the eigenspaces span the whole algebra
};

/// Kernels of (g - lambda Id) for each candidate lambda; duplicates ignored.
inline EigenReport eigenspaces(const AlgebraMap& g, const std::vector<Cyclotomic>& candidates) {
    require(!candidates.empty(), "empty candidate list");
    const size_t d = g.algebra->dim();
    const int n = g.algebra->conductor();
    EigenReport rep;
    size_t total = 0;
    for (const auto& lam : candidates) {
        bool dup = false;
        for (const auto& p : rep.pairs) dup = dup || p.value == lam;
        if (dup) continue;
        Subspace s = kernel(g.matrix - lam * ScalarMatrix::identity(n, d));
        if (s.dim() == 0) continue;
        total += s.dim();
        rep.pairs.push_back(EigenPair{lam, std::move(s)});
    }
    rep.resolved = total == d;
    return rep;
}

/// Default eigenvalue candidates: every root of unity in the working field,
/// plus all entry ratios when the map is Ad_A for a diagonal A.
inline std::vector<Cyclotomic> default_candidates(const AlgebraMap& g) {
    std::vector<Cyclotomic> out = roots_of_unity(g.algebra->conductor());
    auto push = [&](const Cyclotomic& v) {
        for (const auto& w : out)
            if (w == v) return;
        out.push_back(v);
    };
    if (g.provenance == "inner" && g.defining.has_value()) {
        const ScalarMatrix& a = *g.defining;
        bool diag = true;
        for (size_t r = 0; r < a.rows() && diag; ++r)
            for (size_t c = 0; c < a.cols() && diag; ++c)
                if (r != c && !a.at(r, c).is_zero()) diag = false;
        if (diag) {
            for (size_t i = 0; i < a.rows(); ++i)
                for (size_t j = 0; j < a.rows(); ++j) push(a.at(i, i) / a.at(j, j));
        }
    }
    return out;
}

} // namespace gradekit
