#pragma once

#include <fstream>

#include <json.hpp>

#include "gradekit/catalog.hpp"
#include "gradekit/realforms.hpp"

namespace gradekit {

using Json = nlohmann::ordered_json;

/// Canonical serialization: two-space indent, fixed field order, one
/// trailing newline. Two runs on the same value are byte-identical.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace io_detail {

inline const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    require(it != j.end(), std::string("missing field '") + name + "'");
    return *it;
}

inline size_t size_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    require(f.is_number_unsigned(), std::string("field '") + name + "' must be a nonnegative integer");
    return f.get<size_t>();
}

} // namespace io_detail

inline Json to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
    return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    require(j.is_object(), "scalar must be an object");
    int n = static_cast<int>(io_detail::size_field(j, "conductor"));
    const Json& coeffs = io_detail::field(j, "coeffs");
    require(coeffs.is_array(), "field 'coeffs' must be an array");
    std::vector<Rational> v;
    for (const auto& s : coeffs) {
        require(s.is_string(), "coefficients must be exact rational strings");
        v.push_back(parse_rational(s.get<std::string>()));
    }
    return Cyclotomic(n, std::move(v));
}

inline Json to_json(const ScalarMatrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline ScalarMatrix matrix_from_json(const Json& j) {
    size_t rows = io_detail::size_field(j, "rows");
    size_t cols = io_detail::size_field(j, "cols");
    const Json& entries = io_detail::field(j, "entries");
    require(entries.is_array() && entries.size() == rows, "field 'entries' must have one array per row");
    std::optional<int> conductor;
    std::vector<CycVec> data;
    for (const auto& row : entries) {
        require(row.is_array() && row.size() == cols, "row length does not match 'cols'");
        CycVec out;
        for (const auto& cell : row) {
            Cyclotomic c = cyclotomic_from_json(cell);
            if (!conductor.has_value()) conductor = c.conductor();
            require(c.conductor() == *conductor, "mixed conductors in matrix entries");
            out.push_back(std::move(c));
        }
        data.push_back(std::move(out));
    }
    require(conductor.has_value(), "empty matrix");
    return ScalarMatrix::from_rows(*conductor, data);
}

inline Json to_json(const MatrixLieAlgebra& l) {
    Json basis = Json::array();
    for (const auto& b : l.basis()) basis.push_back(to_json(b));
    return Json{{"name", l.name()},
                {"ambient_size", l.ambient_size()},
                {"conductor", l.conductor()},
                {"basis", basis}};
}

inline AlgebraPtr algebra_from_json(const Json& j) {
    const Json& name = io_detail::field(j, "name");
    require(name.is_string(), "field 'name' must be a string");
    size_t ambient = io_detail::size_field(j, "ambient_size");
    int conductor = static_cast<int>(io_detail::size_field(j, "conductor"));
    const Json& basis = io_detail::field(j, "basis");
    require(basis.is_array() && !basis.empty(), "field 'basis' must be a nonempty array");
    std::vector<ScalarMatrix> mats;
    for (const auto& b : basis) {
        ScalarMatrix m = matrix_from_json(b);
        require(m.conductor() == conductor, "basis conductor differs from the algebra conductor");
        mats.push_back(std::move(m));
    }
    return MatrixLieAlgebra::from_basis(name.get<std::string>(), ambient, std::move(mats));
}

inline Json to_json(const AlgebraMap& m) {
    Json j{{"provenance", m.provenance}};
    if ((m.provenance == "inner" || m.provenance == "outer") && m.defining.has_value())
        j["defining"] = to_json(*m.defining);
    else
        j["matrix"] = to_json(m.matrix);
    return j;
}

inline AlgebraMap map_from_json(const Json& j, const AlgebraPtr& l) {
    const Json& prov = io_detail::field(j, "provenance");
    require(prov.is_string(), "field 'provenance' must be a string");
    std::string p = prov.get<std::string>();
    if (p == "inner") return inner_auto(l, matrix_from_json(io_detail::field(j, "defining")));
    if (p == "outer") return outer_auto(l, matrix_from_json(io_detail::field(j, "defining")));
    require(p == "user" || p == "composite", "unknown provenance '" + p + "'");
    AlgebraMap m = user_map(l, matrix_from_json(io_detail::field(j, "matrix")));
    m.provenance = p;
    return m;
}

/// Generator file: {"generators": [map, ...]}; each generator may carry its
/// own "candidates" array, otherwise defaults are derived.
inline GeneratorSet generators_from_json(const Json& j, const AlgebraPtr& l) {
    const Json& gens = io_detail::field(j, "generators");
    require(gens.is_array() && !gens.empty(), "field 'generators' must be a nonempty array");
    GeneratorSet out;
    for (const auto& g : gens) {
        AlgebraMap m = map_from_json(g, l);
        std::vector<Cyclotomic> cands;
        if (auto it = g.find("candidates"); it != g.end()) {
            require(it->is_array(), "field 'candidates' must be an array");
            for (const auto& c : *it) {
                Cyclotomic v = cyclotomic_from_json(c);
                require(v.conductor() == l->conductor(), "candidate conductor differs from the algebra");
                cands.push_back(std::move(v));
            }
            for (const auto& extra : default_candidates(m)) {
                bool dup = false;
                for (const auto& c : cands) dup = dup || c == extra;
                if (!dup) cands.push_back(extra);
            }
        } else {
            cands = default_candidates(m);
        }
        out.maps.push_back(std::move(m));
        out.candidates.push_back(std::move(cands));
    }
    return out;
}

inline Json to_json(const Grading& g) {
    Json subspaces = Json::array();
    for (const auto& p : g.parts()) {
        Json label = Json::array();
        for (const auto& c : p.label) label.push_back(to_json(c));
        Json basis = Json::array();
        for (const auto& v : p.space.basis()) {
            Json row = Json::array();
            for (const auto& c : v) row.push_back(to_json(c));
            basis.push_back(std::move(row));
        }
        subspaces.push_back(Json{{"label", label}, {"basis", basis}});
    }
    return Json{{"algebra", to_json(*g.algebra())}, {"subspaces", subspaces}};
}

inline Grading grading_from_json(const Json& j) {
    AlgebraPtr l = algebra_from_json(io_detail::field(j, "algebra"));
    const Json& subspaces = io_detail::field(j, "subspaces");
    require(subspaces.is_array() && !subspaces.empty(), "field 'subspaces' must be a nonempty array");
    std::vector<GradedSubspace> parts;
    for (const auto& s : subspaces) {
        CycVec label;
        for (const auto& c : io_detail::field(s, "label")) {
            Cyclotomic v = cyclotomic_from_json(c);
            require(v.conductor() == l->conductor(), "label conductor differs from the algebra");
            label.push_back(std::move(v));
        }
        const Json& basis = io_detail::field(s, "basis");
        require(basis.is_array(), "field 'basis' must be an array");
        std::vector<CycVec> vecs;
        for (const auto& row : basis) {
            require(row.is_array() && row.size() == l->dim(), "basis vector length must equal the algebra dimension");
            CycVec v;
            for (const auto& c : row) {
                Cyclotomic value = cyclotomic_from_json(c);
                require(value.conductor() == l->conductor(), "subspace conductor differs from the algebra");
                v.push_back(std::move(value));
            }
            vecs.push_back(std::move(v));
        }
        parts.push_back(GradedSubspace{std::move(label), Subspace::canonicalize(l->conductor(), l->dim(), vecs)});
    }
    return Grading::make(std::move(l), std::move(parts));
}

inline Json to_json(const UniversalGroup& u) {
    Json torsion = Json::array();
    for (const auto& d : u.torsion) torsion.push_back(d.get_str());
    Json j{{"group_indexable", u.group_indexable}, {"group", u.group_str()}, {"free_rank", u.free_rank},
           {"torsion", torsion}};
    Json labels = Json::array();
    for (const auto& lab : u.labels) {
        Json row = Json::array();
        for (const auto& v : lab) row.push_back(v.get_str());
        labels.push_back(std::move(row));
    }
    j["labels"] = labels;
    if (u.witness.has_value()) j["witness"] = Json::array({u.witness->first, u.witness->second});
    return j;
}

inline Json to_json(const DiagGroup& d) {
    Json torsion = Json::array();
    for (const auto& t : d.torsion) torsion.push_back(t.get_str());
    Json exps = Json::array();
    for (const auto& row : d.exponents) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        exps.push_back(std::move(r));
    }
    Json gens = Json::array();
    for (const auto& g : d.generators) gens.push_back(to_json(g.matrix));
    return Json{{"free_rank", d.free_rank}, {"torsion", torsion}, {"exponents", exps}, {"generators", gens}};
}

inline Json to_json(const Fingerprint& f) {
    Json triples = Json::array();
    for (const auto& t : f.triples) triples.push_back(Json::array({t[0], t[1], t[2]}));
    return Json{{"profile", f.profile}, {"group", f.group}, {"bracket_triples", triples}};
}

inline Json to_json(const VerifyReport& r) { return Json{{"ok", r.ok}, {"violations", r.violations}}; }

inline Json to_json(const RealLieAlgebra& r) {
    const size_t deg = detail::field_table(r.parent()->conductor())->degree;
    Json basis = Json::array();
    for (const auto& v : r.basis()) {
        Json row = Json::array();
        for (const auto& c : detail::realify(v, deg)) row.push_back(to_string(c.rational_value()));
        basis.push_back(std::move(row));
    }
    Json tensor = Json::array();
    for (size_t a = 0; a < r.dim(); ++a) {
        Json plane = Json::array();
        for (size_t b = 0; b < r.dim(); ++b) {
            Json row = Json::array();
            for (const auto& q : r.structure(a, b)) row.push_back(to_string(q));
            plane.push_back(std::move(row));
        }
        tensor.push_back(std::move(plane));
    }
    return Json{{"parent", to_json(*r.parent())}, {"dim", r.dim()}, {"basis_realified", basis},
                {"structure", tensor}};
}

inline Json to_json(const RealGrading& g) {
    Json subspaces = Json::array();
    for (const auto& p : g.parts) {
        Json label = Json::array();
        for (const auto& c : p.label) label.push_back(to_json(c));
        Json basis = Json::array();
        for (const auto& v : p.space.basis()) {
            Json row = Json::array();
            for (const auto& c : v) row.push_back(to_string(c.rational_value()));
            basis.push_back(std::move(row));
        }
        subspaces.push_back(Json{{"label", label}, {"basis", basis}});
    }
    return Json{{"algebra", to_json(g.algebra)}, {"subspaces", subspaces}};
}

inline Json to_json(const Signature& s) {
    return Json{{"positive", s.positive}, {"negative", s.negative}, {"radical", s.radical}};
}

/// DOT rendering of the refinement order among named gradings: an edge
/// "a" -> "b" means a strictly refines b; transitively implied edges are
/// omitted.
inline std::string dot_hierarchy(const std::vector<std::pair<std::string, Grading>>& items) {
    const size_t n = items.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) r[i][j] = refines(items[i].second, items[j].second);
    std::ostringstream os;
    os << "digraph hierarchy {\n";
    os << "  rankdir=BT;\n";
    for (const auto& [name, g] : items) os << "  \"" << name << "\" [label=\"" << name << "\\n" << profile_string(g)
                                           << "\"];\n";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!r[i][j] || r[j][i]) continue;  // strict refinement only
            bool implied = false;
            for (size_t k = 0; k < n && !implied; ++k)
                if (k != i && k != j && r[i][k] && !r[k][i] && r[k][j] && !r[j][k]) implied = true;
            if (!implied) os << "  \"" << items[i].first << "\" -> \"" << items[j].first << "\";\n";
        }
    os << "}\n";
    return os.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write '" + path + "'");
    out << content;
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error("malformed JSON in " + what + ": " + e.what());
    }
}

} // namespace gradekit
