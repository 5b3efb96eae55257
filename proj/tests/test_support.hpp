#pragma once

#include <random>

#include "gradekit/gradekit.hpp"

namespace testsupport {

using namespace gradekit;

inline Rational random_rational(std::mt19937& gen, int num_bound = 6, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational r(num(gen), den(gen));
    r.canonicalize();
    return r;
}

inline Rational random_nonzero_rational(std::mt19937& gen, int num_bound = 6, int den_bound = 4) {
    for (;;) {
        Rational r = random_rational(gen, num_bound, den_bound);
        if (r != 0) return r;
    }
}

inline Cyclotomic random_cyclotomic(std::mt19937& gen, int conductor) {
    size_t deg = detail::field_table(conductor)->degree;
    std::vector<Rational> coeffs(deg);
    for (auto& c : coeffs) c = random_rational(gen, 4, 3);
    return Cyclotomic(conductor, std::move(coeffs));
}

inline Cyclotomic random_nonzero_cyclotomic(std::mt19937& gen, int conductor) {
    for (;;) {
        Cyclotomic c = random_cyclotomic(gen, conductor);
        if (!c.is_zero()) return c;
    }
}

inline CycVec random_vector(std::mt19937& gen, int conductor, size_t len) {
    CycVec v;
    for (size_t i = 0; i < len; ++i) v.push_back(random_cyclotomic(gen, conductor));
    return v;
}

inline Subspace random_subspace(std::mt19937& gen, int conductor, size_t ambient, size_t spanners) {
    std::vector<CycVec> rows;
    for (size_t i = 0; i < spanners; ++i) rows.push_back(random_vector(gen, conductor, ambient));
    return Subspace::canonicalize(conductor, ambient, rows);
}

inline IntMatrix random_int_matrix(std::mt19937& gen, size_t rows, size_t cols, int bound = 9) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = dist(gen);
    return m;
}

} // namespace testsupport
