#pragma once

#include <functional>

#include "gradekit/gradings.hpp"

namespace gradekit {

/// Generalized Pauli pair: P = diag(1, w, ..., w^{m-1}) with w of order m,
/// Q the cyclic shift with 1s on the superdiagonal and in the corner.
inline std::pair<ScalarMatrix, ScalarMatrix> pauli_matrices(size_t m, int conductor) {
    require(m >= 2, "Pauli matrices need m >= 2");
    require(conductor % static_cast<int>(m) == 0,
            "conductor " + std::to_string(conductor) + " cannot represent a primitive root of order " +
                std::to_string(m));
    ScalarMatrix p(conductor, m, m), q(conductor, m, m);
    for (size_t i = 0; i < m; ++i)
        p.at(i, i) = Cyclotomic::root_of_unity(conductor, static_cast<long>(i) * (conductor / static_cast<int>(m)));
    for (size_t i = 0; i + 1 < m; ++i) q.at(i, i + 1) = Cyclotomic::one(conductor);
    q.at(m - 1, 0) = Cyclotomic::one(conductor);
    return {std::move(p), std::move(q)};
}

struct GeneratorSet {
    std::vector<AlgebraMap> maps;
    std::vector<std::vector<Cyclotomic>> candidates;
};

namespace detail {

inline const long* sample_primes() {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    return primes;
}

} // namespace detail

/// Diagonal torus sample Ad_D with consecutive-prime entries (respecting the
/// defining form when there is one); grading by it yields the root
/// decomposition.
inline GeneratorSet cartan_generators(const AlgebraPtr& l) {
    const size_t m = l->ambient_size();
    const int n = l->conductor();
    std::vector<Rational> d(m, Rational(0));
    if (l->is_special_linear()) {
        for (size_t i = 0; i < m; ++i) d[i] = detail::sample_primes()[i];
    } else if (l->defining_form().has_value()) {
        const ScalarMatrix& k = l->defining_form()->first;
        std::vector<size_t> pair(m, m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) {
                if (k.at(i, j).is_zero()) continue;
                require(pair[i] == m, "Cartan generators need a monomial defining form");
                pair[i] = j;
            }
            require(pair[i] != m, "defining form has a zero row");
        }
        size_t next = 0;
        bool any_pair = false;
        for (size_t i = 0; i < m; ++i) {
            if (d[i] != 0) continue;
            if (pair[i] == i) {
                d[i] = 1;  // self-paired coordinate carries no torus factor
                continue;
            }
            any_pair = true;
            d[i] = detail::sample_primes()[next++];
            d[pair[i]] = Rational(1) / d[i];
        }
        require(any_pair, "defining form admits no diagonal torus");
    } else {
        throw error("Cartan generators support sl, o_K and sp_K algebras");
    }
    ScalarMatrix diag(n, m, m);
    for (size_t i = 0; i < m; ++i) diag.at(i, i) = Cyclotomic(n, d[i]);
    GeneratorSet out;
    out.maps.push_back(inner_auto(l, diag));
    std::vector<Cyclotomic> ratios;
    auto push = [&](const Cyclotomic& v) {
        for (const auto& w : ratios)
            if (w == v) return;
        ratios.push_back(v);
    };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) push(Cyclotomic(n, d[i] / d[j]));
    out.candidates.push_back(std::move(ratios));
    return out;
}

namespace detail {

// lambda with lambda^2 = mu, searched in the monomial form q * zeta^j.
inline std::optional<Cyclotomic> monomial_sqrt(const Cyclotomic& mu) {
    const int n = mu.conductor();
    for (int j = 0; j < n; ++j) {
        Cyclotomic scaled = mu * Cyclotomic::root_of_unity(n, -2L * j);
        if (!scaled.is_rational()) continue;
        Rational root;
        if (!rational_sqrt(scaled.rational_value(), root)) continue;
        return Cyclotomic(n, root) * Cyclotomic::root_of_unity(n, j);
    }
    return std::nullopt;
}

struct Sl2Lines {
    Subspace h_line, e_plus, e_minus;  // in the coordinates of the parent algebra
};

// Standard line decompositions of a three-dimensional simple ideal, computed
// from a semisimple element and its eigenvectors.
inline Sl2Lines sl2_lines(const AlgebraPtr& parent, const AlgebraPtr& ideal) {
    const int n = ideal->conductor();
    require(ideal->dim() == 3, "sl(2)-type ideal expected");
    std::vector<CycVec> embedded;  // ideal basis in parent coordinates
    for (const auto& b : ideal->basis()) {
        auto c = parent->coordinates(b);
        require(c.has_value(), "ideal does not embed into its parent");
        embedded.push_back(*c);
    }
    std::vector<CycVec> candidates;
    for (size_t i = 0; i < 3; ++i) candidates.push_back(ideal->unit(i));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            CycVec s = ideal->unit(i);
            vec_axpy(s, Cyclotomic::one(n), ideal->unit(j));
            candidates.push_back(s);
            CycVec t = ideal->unit(i);
            vec_axpy(t, -Cyclotomic::one(n), ideal->unit(j));
            candidates.push_back(t);
        }
    for (const auto& x : candidates) {
        ScalarMatrix ad(n, 3, 3);
        for (size_t b = 0; b < 3; ++b) {
            CycVec col = ideal->bracket_coords(x, ideal->unit(b));
            for (size_t r = 0; r < 3; ++r) ad.at(r, b) = col[r];
        }
        auto mp = minimal_polynomial(ad);
        if (mp.size() != 4 || !mp[0].is_zero() || !mp[2].is_zero()) continue;
        Cyclotomic mu = -mp[1];
        if (mu.is_zero()) continue;
        auto lambda = monomial_sqrt(mu);
        if (!lambda.has_value()) continue;
        Subspace plus = kernel(ad - *lambda * ScalarMatrix::identity(n, 3));
        Subspace minus = kernel(ad + *lambda * ScalarMatrix::identity(n, 3));
        if (plus.dim() != 1 || minus.dim() != 1) continue;
        auto to_parent = [&](const CycVec& v) {
            CycVec out(parent->dim(), Cyclotomic(n));
            for (size_t i = 0; i < 3; ++i)
                if (!v[i].is_zero()) vec_axpy(out, v[i], embedded[i]);
            return out;
        };
        auto line = [&](const CycVec& v) {
            return Subspace::canonicalize(n, parent->dim(), {to_parent(v)});
        };
        return Sl2Lines{line(x), line(plus.basis().front()), line(minus.basis().front())};
    }
    throw error("no semisimple element with a representable spectrum found in the ideal");
}

} // namespace detail

/// The four decompositions of sl(2): trivial, the Cartan line plus the
/// nilpotent plane, and the two finest gradings (diagonal and symmetric /
/// antisymmetric split).
inline std::vector<Grading> sl2_catalog(int conductor) {
    AlgebraPtr l = MatrixLieAlgebra::sl(2, conductor);
    // basis order of sl(2): E = E_01, F = E_10, H = E_00 - E_11
    auto line = [&](std::initializer_list<std::pair<size_t, Rational>> combo) {
        CycVec v(3, Cyclotomic(conductor));
        for (const auto& [idx, c] : combo) v[idx] = Cyclotomic(conductor, c);
        return Subspace::canonicalize(conductor, 3, {v});
    };
    Subspace e = line({{0, Rational(1)}});
    Subspace f = line({{1, Rational(1)}});
    Subspace h = line({{2, Rational(1)}});
    Subspace ef_plane = join(e, f);
    Subspace epf = line({{0, Rational(1)}, {1, Rational(1)}});
    Subspace emf = line({{0, Rational(1)}, {1, Rational(-1)}});
    std::vector<Grading> out;
    out.push_back(Grading::from_subspaces(l, {Subspace::full(conductor, 3)}));
    out.push_back(Grading::from_subspaces(l, {h, ef_plane}));
    out.push_back(Grading::from_subspaces(l, {h, e, f}));
    out.push_back(Grading::from_subspaces(l, {h, epf, emf}));
    return out;
}

/// Direct-sum decompositions of o(4) with K = I: Cartan x Cartan (Cartan
/// plane merged), Cartan x Pauli, Pauli x Pauli, and the refined Cartan
/// grading that splits the Cartan plane (the non-group specimen).
inline std::vector<Grading> o4_catalog(int conductor) {
    AlgebraPtr o = MatrixLieAlgebra::orthogonal(ScalarMatrix::identity(conductor, 4));
    auto ideals = ideal_decomposition(o);
    require(ideals.size() == 2, "o(4) should split into two ideals");
    detail::Sl2Lines a = detail::sl2_lines(o, ideals[0]);
    detail::Sl2Lines b = detail::sl2_lines(o, ideals[1]);

    auto cartan_lines = [](const detail::Sl2Lines& s) {
        return std::vector<Subspace>{s.h_line, s.e_plus, s.e_minus};
    };
    auto pauli_lines = [&](const detail::Sl2Lines& s) {
        CycVec p = s.e_plus.basis().front();
        CycVec m = s.e_minus.basis().front();
        CycVec sum = p;
        vec_axpy(sum, Cyclotomic::one(conductor), m);
        CycVec dif = p;
        vec_axpy(dif, -Cyclotomic::one(conductor), m);
        return std::vector<Subspace>{s.h_line, Subspace::canonicalize(conductor, o->dim(), {sum}),
                                     Subspace::canonicalize(conductor, o->dim(), {dif})};
    };
    auto concat = [](std::vector<Subspace> u, const std::vector<Subspace>& v) {
        u.insert(u.end(), v.begin(), v.end());
        return u;
    };

    std::vector<Grading> out;
    std::vector<Subspace> cartan_merged{join(a.h_line, b.h_line), a.e_plus, a.e_minus, b.e_plus, b.e_minus};
    out.push_back(Grading::from_subspaces(o, cartan_merged));
    out.push_back(Grading::from_subspaces(o, concat(cartan_lines(a), pauli_lines(b))));
    out.push_back(Grading::from_subspaces(o, concat(pauli_lines(a), pauli_lines(b))));
    out.push_back(Grading::from_subspaces(o, concat(cartan_lines(a), cartan_lines(b))));
    return out;
}

struct FormMatrix {
    std::string name;
    ScalarMatrix k;
    FormKind kind;
};

/// Standard defining matrices for the displayed-method search: identity,
/// antidiagonal, signatures, and the antisymmetric block / antidiagonal /
/// clock-shift forms.
inline std::vector<FormMatrix> standard_K_list(size_t m, int conductor) {
    require(m >= 2, "forms need m >= 2");
    std::vector<FormMatrix> out;
    out.push_back({"identity", ScalarMatrix::identity(conductor, m), FormKind::symmetric});
    {
        ScalarMatrix k(conductor, m, m);
        for (size_t i = 0; i < m; ++i) k.at(i, m - 1 - i) = Cyclotomic::one(conductor);
        out.push_back({"antidiag", std::move(k), FormKind::symmetric});
    }
    for (size_t p = m - 1; p >= 1; --p) {
        ScalarMatrix k(conductor, m, m);
        for (size_t i = 0; i < m; ++i) k.at(i, i) = Cyclotomic(conductor, Rational(i < p ? 1 : -1));
        out.push_back({"signature_" + std::to_string(p) + "_" + std::to_string(m - p), std::move(k),
                       FormKind::symmetric});
    }
    if (m % 2 == 0) {
        {
            ScalarMatrix k(conductor, m, m);
            for (size_t i = 0; i < m / 2; ++i) {
                k.at(i, m / 2 + i) = Cyclotomic::one(conductor);
                k.at(m / 2 + i, i) = Cyclotomic(conductor, Rational(-1));
            }
            out.push_back({"symplectic_block", std::move(k), FormKind::antisymmetric});
        }
        {
            ScalarMatrix k(conductor, m, m);
            for (size_t i = 0; i < m; ++i)
                k.at(i, m - 1 - i) = Cyclotomic(conductor, Rational(i < m / 2 ? 1 : -1));
            out.push_back({"symplectic_antidiag_split", std::move(k), FormKind::antisymmetric});
        }
        {
            ScalarMatrix k(conductor, m, m);
            for (size_t i = 0; i < m; ++i)
                k.at(i, m - 1 - i) = Cyclotomic(conductor, Rational(i % 2 == 0 ? 1 : -1));
            out.push_back({"symplectic_antidiag_alternating", std::move(k), FormKind::antisymmetric});
        }
        if (conductor % static_cast<int>(m) == 0) {
            auto [p, q] = pauli_matrices(m, conductor);
            ScalarMatrix k = p;
            for (size_t i = 0; i < m / 2; ++i) k = k * q;
            if (k.is_antisymmetric())
                out.push_back({"symplectic_clock_shift", std::move(k), FormKind::antisymmetric});
        }
    }
    return out;
}

struct CatalogEntry {
    std::string name;
    std::string description;
    int required_divisor;  // the working conductor must be divisible by this
    std::vector<std::pair<size_t, size_t>> expected_profile;  // (dim, count), descending dim
    std::function<Grading(int conductor)> build;
};

inline std::vector<std::pair<size_t, size_t>> profile_of(const Grading& g) {
    std::map<size_t, size_t, std::greater<size_t>> hist;
    for (const auto& p : g.parts()) hist[p.space.dim()] += 1;
    return {hist.begin(), hist.end()};
}

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> e;
        auto pauli_grading = [](size_t m, int n) {
            AlgebraPtr l = MatrixLieAlgebra::sl(m, n);
            auto [p, q] = pauli_matrices(m, n);
            std::vector<AlgebraMap> gens{inner_auto(l, p), inner_auto(l, q)};
            std::vector<std::vector<Cyclotomic>> cands{roots_of_unity(n), roots_of_unity(n)};
            return grade_by(l, gens, cands);
        };
        auto cartan_grading = [](AlgebraPtr l) {
            GeneratorSet gs = cartan_generators(l);
            return grade_by(l, gs.maps, gs.candidates);
        };

        e.push_back({"sl2.trivial", "whole algebra as a single subspace", 1, {{3, 1}},
                     [](int n) { return sl2_catalog(n)[0]; }});
        e.push_back({"sl2.upsilon0", "Cartan line plus the nilpotent plane", 1, {{2, 1}, {1, 1}},
                     [](int n) { return sl2_catalog(n)[1]; }});
        e.push_back({"sl2.upsilon1", "diagonal and the two nilpotent lines", 1, {{1, 3}},
                     [](int n) { return sl2_catalog(n)[2]; }});
        e.push_back({"sl2.upsilon2", "diagonal, symmetric and antisymmetric lines", 1, {{1, 3}},
                     [](int n) { return sl2_catalog(n)[3]; }});
        e.push_back({"sl2.cartan", "root decomposition of sl(2) from the diagonal torus", 1, {{1, 3}},
                     [cartan_grading](int n) { return cartan_grading(MatrixLieAlgebra::sl(2, n)); }});
        e.push_back({"sl2.pauli", "simultaneous eigenspaces of Ad_P2 and Ad_Q2", 2, {{1, 3}},
                     [pauli_grading](int n) { return pauli_grading(2, n); }});
        e.push_back({"sl3.cartan", "root decomposition of sl(3)", 1, {{2, 1}, {1, 6}},
                     [cartan_grading](int n) { return cartan_grading(MatrixLieAlgebra::sl(3, n)); }});
        e.push_back({"sl3.pauli", "simultaneous eigenspaces of Ad_P3 and Ad_Q3", 3, {{1, 8}},
                     [pauli_grading](int n) { return pauli_grading(3, n); }});
        e.push_back({"sl4.cartan", "root decomposition of sl(4)", 1, {{3, 1}, {1, 12}},
                     [cartan_grading](int n) { return cartan_grading(MatrixLieAlgebra::sl(4, n)); }});
        e.push_back({"sl4.pauli", "simultaneous eigenspaces of Ad_P4 and Ad_Q4", 4, {{1, 15}},
                     [pauli_grading](int n) { return pauli_grading(4, n); }});
        e.push_back({"sp4.cartan", "root decomposition of sp(4) in the block representation", 1,
                     {{2, 1}, {1, 8}}, [cartan_grading](int n) {
                         ScalarMatrix k(n, 4, 4);
                         for (size_t i = 0; i < 2; ++i) {
                             k.at(i, 2 + i) = Cyclotomic::one(n);
                             k.at(2 + i, i) = Cyclotomic(n, Rational(-1));
                         }
                         return cartan_grading(MatrixLieAlgebra::symplectic(k));
                     }});
        e.push_back({"o4.cartan", "Cartan x Cartan with the Cartan plane merged", 4, {{2, 1}, {1, 4}},
                     [](int n) { return o4_catalog(n)[0]; }});
        e.push_back({"o4.cartan_x_pauli", "Cartan lines on one ideal, Pauli lines on the other", 4, {{1, 6}},
                     [](int n) { return o4_catalog(n)[1]; }});
        e.push_back({"o4.pauli_x_pauli", "Pauli lines on both ideals", 4, {{1, 6}},
                     [](int n) { return o4_catalog(n)[2]; }});
        e.push_back({"o4.cartan_refined", "Cartan lines on both ideals (splits the Cartan plane)", 4, {{1, 6}},
                     [](int n) { return o4_catalog(n)[3]; }});
        return e;
    }();
    return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace gradekit
