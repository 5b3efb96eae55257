#pragma once

#include <array>
#include <map>
#include <sstream>

#include "gradekit/autos.hpp"
#include "gradekit/smith.hpp"

namespace gradekit {

struct GradedSubspace {
    CycVec label;  // eigenvalue tuple; empty for synthetic decompositions
    Subspace space;
};

/// Decomposition of an algebra into labeled subspaces, kept in a canonical
/// deterministic order (by dimension, then lexicographic basis).
class Grading {
public:
    static Grading make(AlgebraPtr algebra, std::vector<GradedSubspace> parts) {
        std::sort(parts.begin(), parts.end(), [](const GradedSubspace& a, const GradedSubspace& b) {
            return Subspace::compare(a.space, b.space) < 0;
        });
        Grading g;
        g.algebra_ = std::move(algebra);
        g.parts_ = std::move(parts);
        return g;
    }

    static Grading from_subspaces(AlgebraPtr algebra, const std::vector<Subspace>& spaces) {
        std::vector<GradedSubspace> parts;
        for (const auto& s : spaces) parts.push_back(GradedSubspace{{}, s});
        return make(std::move(algebra), std::move(parts));
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    size_t size() const { return parts_.size(); }
    const GradedSubspace& part(size_t i) const { return parts_.at(i); }
    const std::vector<GradedSubspace>& parts() const { return parts_; }

private:
    AlgebraPtr algebra_;
    std::vector<GradedSubspace> parts_;
};

/// Equality of the underlying decompositions (labels ignored).
inline bool same_decomposition(const Grading& a, const Grading& b) {
    if (!same_algebra(*a.algebra(), *b.algebra()) || a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.part(i).space != b.part(i).space) return false;
    return true;
}

inline Subspace bracket_span(const MatrixLieAlgebra& l, const Subspace& u, const Subspace& v) {
    std::vector<CycVec> vecs;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) vecs.push_back(l.bracket_coords(x, y));
    return Subspace::canonicalize(l.conductor(), l.dim(), vecs);
}

/// Simultaneous eigenspace refinement by commuting diagonalizable
/// automorphisms; labels are the eigenvalue tuples.
inline Grading grade_by(const AlgebraPtr& l, const std::vector<AlgebraMap>& gens,
                        const std::vector<std::vector<Cyclotomic>>& candidates) {
    require(gens.size() == candidates.size(), "one candidate list per generator is required");
    for (size_t i = 0; i < gens.size(); ++i) {
        require(same_algebra(*gens[i].algebra, *l), "generator acts on a different algebra");
        require(is_automorphism(gens[i]), "generator " + std::to_string(i) + " is not an automorphism");
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            require(commute(gens[i], gens[j]),
                    "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");

    std::vector<GradedSubspace> parts{GradedSubspace{{}, Subspace::full(l->conductor(), l->dim())}};
    for (size_t i = 0; i < gens.size(); ++i) {
        EigenReport rep = eigenspaces(gens[i], candidates[i]);
        require(rep.resolved, "spectrum of generator " + std::to_string(i) +
                                  " is not resolved by the candidate eigenvalues");
        std::vector<GradedSubspace> next;
        for (const auto& p : parts)
            for (const auto& e : rep.pairs) {
                Subspace cut = meet(p.space, e.space);
                if (cut.dim() == 0) continue;
                CycVec label = p.label;
                label.push_back(e.value);
                next.push_back(GradedSubspace{std::move(label), std::move(cut)});
            }
        parts = std::move(next);
    }
    return Grading::make(l, std::move(parts));
}

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

/// Checks the direct-sum property and single-target bracket containment.
inline VerifyReport verify_grading(const Grading& g) {
    VerifyReport rep;
    const auto& l = *g.algebra();
    if (g.size() == 0) {
        rep.fail("grading has no subspaces");
        return rep;
    }
    size_t total = 0;
    std::vector<CycVec> all;
    for (size_t i = 0; i < g.size(); ++i) {
        const Subspace& s = g.part(i).space;
        if (s.dim() == 0) rep.fail("subspace " + std::to_string(i) + " is zero");
        if (s.ambient_dim() != l.dim()) rep.fail("subspace " + std::to_string(i) + " has wrong ambient dimension");
        total += s.dim();
        for (const auto& v : s.basis()) all.push_back(v);
    }
    if (total != l.dim())
        rep.fail("subspace dimensions sum to " + std::to_string(total) + ", expected " + std::to_string(l.dim()));
    else if (Subspace::canonicalize(l.conductor(), l.dim(), all).dim() != l.dim())
        rep.fail("subspaces do not form a direct sum");
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t k = j; k < g.size(); ++k) {
            Subspace span = bracket_span(l, g.part(j).space, g.part(k).space);
            if (span.dim() == 0) continue;
            bool found = false;
            for (size_t t = 0; t < g.size() && !found; ++t) found = g.part(t).space.contains(span);
            if (!found)
                rep.fail("bracket of subspaces " + std::to_string(j) + " and " + std::to_string(k) +
                         " is not contained in a single subspace");
        }
    return rep;
}

/// Target index of each nonzero pairwise bracket; throws if some bracket is
/// not contained in a single subspace.
inline std::vector<std::vector<std::optional<size_t>>> bracket_targets(const Grading& g) {
    const auto& l = *g.algebra();
    std::vector<std::vector<std::optional<size_t>>> t(g.size(), std::vector<std::optional<size_t>>(g.size()));
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t k = j; k < g.size(); ++k) {
            Subspace span = bracket_span(l, g.part(j).space, g.part(k).space);
            if (span.dim() == 0) continue;
            std::optional<size_t> target;
            for (size_t i = 0; i < g.size(); ++i)
                if (g.part(i).space.contains(span)) {
                    target = i;
                    break;
                }
            require(target.has_value(), "not a grading: bracket lands outside every subspace");
            t[j][k] = target;
            t[k][j] = target;
        }
    return t;
}

inline bool refines(const Grading& fine, const Grading& coarse) {
    require(same_algebra(*fine.algebra(), *coarse.algebra()), "gradings of different algebras");
    std::vector<size_t> sums(coarse.size(), 0);
    for (size_t i = 0; i < fine.size(); ++i) {
        std::optional<size_t> host;
        for (size_t j = 0; j < coarse.size(); ++j)
            if (coarse.part(j).space.contains(fine.part(i).space)) {
                host = j;
                break;
            }
        if (!host.has_value()) return false;
        sums[*host] += fine.part(i).space.dim();
    }
    for (size_t j = 0; j < coarse.size(); ++j)
        if (sums[j] != coarse.part(j).space.dim()) return false;
    return true;
}

inline Grading coarsen(const Grading& g, const std::vector<std::vector<size_t>>& partition) {
    std::vector<size_t> seen(g.size(), 0);
    for (const auto& block : partition)
        for (size_t i : block) {
            require(i < g.size(), "partition index out of range");
            seen[i] += 1;
        }
    for (size_t i = 0; i < g.size(); ++i)
        require(seen[i] == 1, "partition must cover every subspace exactly once");
    std::vector<GradedSubspace> parts;
    for (const auto& block : partition) {
        require(!block.empty(), "empty partition block");
        Subspace s = g.part(block.front()).space;
        for (size_t i = 1; i < block.size(); ++i) s = join(s, g.part(block[i]).space);
        CycVec label = block.size() == 1 ? g.part(block.front()).label : CycVec{};
        parts.push_back(GradedSubspace{std::move(label), std::move(s)});
    }
    Grading out = Grading::make(g.algebra(), std::move(parts));
    VerifyReport rep = verify_grading(out);
    require(rep.ok, "merged subspaces violate the grading axioms: " +
                        (rep.violations.empty() ? std::string() : rep.violations.front()));
    return out;
}

/// Universal abelian indexing of a grading, canonicalized by Smith normal
/// form, or a witness pair when no group indexing exists.
struct UniversalGroup {
    bool group_indexable = true;
    size_t free_rank = 0;
    std::vector<Integer> torsion;                // orders >= 2, ascending divisibility
    std::vector<std::vector<Integer>> labels;    // per subspace: torsion coords, then free coords
    std::optional<std::pair<size_t, size_t>> witness;  // colliding subspace indices

    std::string group_str() const {
        if (!group_indexable) return "non-group";
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) {
            os << "Z";
            first = false;
        } else if (free_rank > 1) {
            os << "Z^" << free_rank;
            first = false;
        }
        for (const auto& d : torsion) {
            if (!first) os << " x ";
            os << "Z" << d.get_str();
            first = false;
        }
        return first ? "trivial" : os.str();
    }
};

namespace detail {

struct IndexLattice {
    size_t rank = 0;
    std::vector<Integer> torsion;              // d_i >= 2 with positions
    std::vector<size_t> torsion_pos;           // row index in U-coordinates
    std::vector<std::vector<Integer>> labels;  // per subspace, layout: torsion then free
    size_t free_count = 0;
};

// Quotient Z^s by the relation lattice e_j + e_k - e_l over nonzero brackets.
inline IndexLattice index_lattice(const Grading& g) {
    auto targets = bracket_targets(g);
    const size_t s = g.size();
    std::vector<std::vector<Integer>> relations;
    for (size_t j = 0; j < s; ++j)
        for (size_t k = j; k < s; ++k) {
            if (!targets[j][k].has_value()) continue;
            std::vector<Integer> rel(s, Integer(0));
            rel[j] += 1;
            rel[k] += 1;
            rel[*targets[j][k]] -= 1;
            relations.push_back(std::move(rel));
        }
    IntMatrix a(s, std::max<size_t>(relations.size(), 1));
    for (size_t c = 0; c < relations.size(); ++c)
        for (size_t r = 0; r < s; ++r) a.at(r, c) = relations[c][r];
    SmithResult snf = smith_normal_form(a);
    IndexLattice out;
    const size_t diag = std::min(snf.s.rows(), snf.s.cols());
    for (size_t i = 0; i < diag; ++i)
        if (snf.s.at(i, i) != 0) out.rank = i + 1;
    for (size_t i = 0; i < out.rank; ++i)
        if (snf.s.at(i, i) >= 2) {
            out.torsion.push_back(snf.s.at(i, i));
            out.torsion_pos.push_back(i);
        }
    out.free_count = s - out.rank;
    for (size_t j = 0; j < s; ++j) {
        std::vector<Integer> label;
        for (size_t t = 0; t < out.torsion.size(); ++t) {
            Integer v = snf.u.at(out.torsion_pos[t], j) % out.torsion[t];
            if (v < 0) v += out.torsion[t];
            label.push_back(v);
        }
        for (size_t i = out.rank; i < s; ++i) label.push_back(snf.u.at(i, j));
        out.labels.push_back(std::move(label));
    }
    return out;
}

} // namespace detail

inline UniversalGroup universal_group(const Grading& g) {
    auto lat = detail::index_lattice(g);
    UniversalGroup out;
    out.free_rank = lat.free_count;
    out.torsion = lat.torsion;
    out.labels = lat.labels;
    for (size_t i = 0; i < out.labels.size() && out.group_indexable; ++i)
        for (size_t j = i + 1; j < out.labels.size(); ++j)
            if (out.labels[i] == out.labels[j]) {
                out.group_indexable = false;
                out.witness = std::make_pair(i, j);
                break;
            }
    return out;
}

/// Character-lattice description of Diag: all automorphisms acting as a
/// scalar on each subspace, with concrete sampled generators.
struct DiagGroup {
    size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<std::vector<Integer>> exponents;  // per-subspace character exponents
    std::vector<AlgebraMap> generators;
    std::vector<std::vector<Cyclotomic>> candidates;  // spectra of the generators
};

inline DiagGroup diag_group(const Grading& g) {
    auto lat = detail::index_lattice(g);
    const auto& l = *g.algebra();
    const int n = l.conductor();
    DiagGroup out;
    out.free_rank = lat.free_count;
    out.torsion = lat.torsion;
    out.exponents = lat.labels;

    for (const auto& d : lat.torsion)
        if (Integer(n) % d != 0) {
            Integer need(n);
            for (const auto& t : lat.torsion) {
                Integer gcd_v;
                mpz_gcd(gcd_v.get_mpz_t(), need.get_mpz_t(), t.get_mpz_t());
                need = need / gcd_v * t;
            }
            throw error("conductor " + std::to_string(n) + " cannot realize the torsion scalars; need a conductor divisible by " +
                        need.get_str());
        }

    // column basis of the decomposition, for assembling scaling operators
    ScalarMatrix cols(n, l.dim(), l.dim());
    std::vector<size_t> part_of_col(l.dim());
    {
        size_t c = 0;
        for (size_t p = 0; p < g.size(); ++p)
            for (const auto& v : g.part(p).space.basis()) {
                for (size_t r = 0; r < l.dim(); ++r) cols.at(r, c) = v[r];
                part_of_col[c] = p;
                ++c;
            }
    }
    auto cols_inv = cols.inverse();
    require(cols_inv.has_value(), "grading subspaces do not span the algebra");

    auto make_generator = [&](const std::vector<Cyclotomic>& scalar_per_part) {
        ScalarMatrix diag(n, l.dim(), l.dim());
        for (size_t c = 0; c < l.dim(); ++c) diag.at(c, c) = scalar_per_part[part_of_col[c]];
        AlgebraMap m{g.algebra(), cols * diag * *cols_inv, "composite", std::nullopt};
        std::vector<Cyclotomic> cands;
        for (const auto& s : scalar_per_part) {
            bool dup = false;
            for (const auto& t : cands) dup = dup || t == s;
            if (!dup) cands.push_back(s);
        }
        out.generators.push_back(std::move(m));
        out.candidates.push_back(std::move(cands));
    };

    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (size_t t = 0; t < lat.torsion.size(); ++t) {
        long d = lat.torsion[t].get_si();
        std::vector<Cyclotomic> scal;
        for (size_t p = 0; p < g.size(); ++p)
            scal.push_back(Cyclotomic::root_of_unity(n, (n / d) * lat.labels[p][t].get_si()));
        make_generator(scal);
    }
    for (size_t f = 0; f < lat.free_count; ++f) {
        require(f < sizeof(primes) / sizeof(primes[0]), "free rank exceeds the sampling prime table");
        Rational base(primes[f]);
        std::vector<Cyclotomic> scal;
        for (size_t p = 0; p < g.size(); ++p) {
            long e = lat.labels[p][lat.torsion.size() + f].get_si();
            Rational v(1);
            for (long i = 0; i < (e >= 0 ? e : -e); ++i) v *= base;
            if (e < 0) v = 1 / v;
            scal.push_back(Cyclotomic(n, v));
        }
        make_generator(scal);
    }
    return out;
}

/// Grades by the sampled Diag generators; by construction this reproduces
/// a group-indexable grading.
inline Grading regrade_from_diag(const Grading& g) {
    UniversalGroup u = universal_group(g);
    require(u.group_indexable, "grading is not group-indexable");
    DiagGroup d = diag_group(g);
    if (d.generators.empty()) {
        // trivial Diag: the only consistent scaling is the identity
        return Grading::from_subspaces(g.algebra(),
                                       {Subspace::full(g.algebra()->conductor(), g.algebra()->dim())});
    }
    return grade_by(g.algebra(), d.generators, d.candidates);
}

/// Sufficient fineness certificate: every subspace is one-dimensional.
inline bool is_finest(const Grading& g) {
    for (const auto& p : g.parts())
        if (p.space.dim() != 1) return false;
    return true;
}

struct Fingerprint {
    std::vector<size_t> profile;  // dimensions, descending
    std::string group;
    std::vector<std::array<size_t, 3>> triples;  // sorted multiset of (dim j, dim k, dim l)

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.profile == b.profile && a.group == b.group && a.triples == b.triples;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "profile=";
        for (size_t i = 0; i < profile.size(); ++i) os << (i ? "," : "") << profile[i];
        os << ";group=" << group << ";triples=";
        for (size_t i = 0; i < triples.size(); ++i)
            os << (i ? "," : "") << "(" << triples[i][0] << "," << triples[i][1] << "," << triples[i][2] << ")";
        return os.str();
    }
};

/// Equivalence-invariant summary: dimension profile, universal group, and
/// the multiset of bracket-degree triples.
inline Fingerprint fingerprint(const Grading& g) {
    Fingerprint fp;
    for (const auto& p : g.parts()) fp.profile.push_back(p.space.dim());
    std::sort(fp.profile.rbegin(), fp.profile.rend());
    fp.group = universal_group(g).group_str();
    auto targets = bracket_targets(g);
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t k = 0; k < g.size(); ++k) {
            if (!targets[j][k].has_value()) continue;
            fp.triples.push_back({g.part(j).space.dim(), g.part(k).space.dim(), g.part(*targets[j][k]).space.dim()});
        }
    std::sort(fp.triples.begin(), fp.triples.end());
    return fp;
}

inline std::string profile_string(const Grading& g) {
    std::map<size_t, size_t, std::greater<size_t>> hist;
    for (const auto& p : g.parts()) hist[p.space.dim()] += 1;
    std::ostringstream os;
    bool first = true;
    for (const auto& [dim, count] : hist) {
        if (!first) os << " + ";
        os << count << " x " << dim << "-dim";
        first = false;
    }
    return os.str();
}

/// Restriction of a grading of the full traceless algebra to a bilinear-form
/// subalgebra, when that subalgebra is a direct sum of grading subspaces.
inline std::optional<Grading> displayed(const Grading& g, const ScalarMatrix& k, FormKind kind) {
    const AlgebraPtr& amb = g.algebra();
    require(amb->is_special_linear(), "displayed method needs a grading of the full traceless matrix algebra");
    require(k.rows() == amb->ambient_size(), "defining form size does not match the ambient algebra");
    AlgebraPtr sub = kind == FormKind::symmetric ? MatrixLieAlgebra::orthogonal(k) : MatrixLieAlgebra::symplectic(k);

    std::vector<CycVec> sub_coords;
    for (const auto& b : sub->basis()) {
        auto c = amb->coordinates(b);
        require(c.has_value(), "subalgebra does not embed into the graded algebra");
        sub_coords.push_back(*c);
    }
    Subspace target = Subspace::canonicalize(amb->conductor(), amb->dim(), sub_coords);

    std::vector<GradedSubspace> parts;
    size_t total = 0;
    for (const auto& p : g.parts()) {
        Subspace cut = meet(p.space, target);
        if (cut.dim() == 0) continue;
        total += cut.dim();
        std::vector<CycVec> rows;
        for (const auto& v : cut.basis()) {
            auto c = sub->coordinates(amb->matrix_of(v));
            require(c.has_value(), "intersection vector not in the subalgebra");
            rows.push_back(*c);
        }
        parts.push_back(GradedSubspace{p.label, Subspace::canonicalize(sub->conductor(), sub->dim(), rows)});
    }
    if (total != sub->dim()) return std::nullopt;
    Grading out = Grading::make(sub, std::move(parts));
    require(verify_grading(out).ok, "displayed subspaces are not a grading");
    return out;
}

} // namespace gradekit
