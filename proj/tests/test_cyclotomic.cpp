#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace gradekit;
using testsupport::random_cyclotomic;
using testsupport::random_nonzero_cyclotomic;

namespace {
Cyclotomic rat(int conductor, const Rational& r) { return Cyclotomic(conductor, r); }
} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1.5"), error);
    CHECK_THROWS_AS(parse_rational("a/b"), error);
    CHECK_THROWS_AS(parse_rational("1/0"), error);
}

TEST_CASE("basic field arithmetic in Q(zeta_4)") {
    const int n = 4;
    Cyclotomic i = Cyclotomic::root_of_unity(n, 1);
    Cyclotomic half = rat(n, Rational(1, 2));

    CHECK((half + i) + (half - i) == Cyclotomic::one(n));
    CHECK(i * i == -Cyclotomic::one(n));
    // (1+i)^{-1} = (1-i)/2
    Cyclotomic lhs = (Cyclotomic::one(n) + i).inverse();
    Cyclotomic rhs = (Cyclotomic::one(n) - i) * half;
    CHECK(lhs == rhs);
    CHECK(i.conj() == -i);
    CHECK(i.conj() == i.pow(-1));
}

TEST_CASE("errors: conductor mismatch and zero inversion") {
    Cyclotomic a(4, Rational(1));
    Cyclotomic b(3, Rational(1));
    CHECK_THROWS_AS(a + b, error);
    CHECK_THROWS_AS(a * b, error);
    CHECK_THROWS_AS(a == b, error);
    CHECK_THROWS_AS(Cyclotomic::zero(4).inverse(), error);
}

TEST_CASE("root-of-unity identities") {
    for (int n : {3, 4, 5, 6, 12}) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        CHECK(z.pow(n) == Cyclotomic::one(n));
        Cyclotomic sum(n);
        for (int k = 0; k < n; ++k) sum += z.pow(k);
        CHECK(sum.is_zero());
        CHECK(z * z.conj() == Cyclotomic::one(n));
    }
}

TEST_CASE("field axioms hold exactly on random scalars") {
    std::mt19937 gen(20240811);
    for (int n : {4, 12}) {
        for (int iter = 0; iter < 60; ++iter) {
            Cyclotomic a = random_cyclotomic(gen, n);
            Cyclotomic b = random_cyclotomic(gen, n);
            Cyclotomic c = random_cyclotomic(gen, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            Cyclotomic nz = random_nonzero_cyclotomic(gen, n);
            CHECK(nz * nz.inverse() == Cyclotomic::one(n));
        }
    }
}

TEST_CASE("conjugation is a field automorphism") {
    std::mt19937 gen(7);
    for (int iter = 0; iter < 40; ++iter) {
        Cyclotomic a = random_cyclotomic(gen, 12);
        Cyclotomic b = random_cyclotomic(gen, 12);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("roots_of_unity enumerates the torsion of the unit group") {
    auto u4 = roots_of_unity(4);
    CHECK(u4.size() == 4);
    auto u3 = roots_of_unity(3);
    CHECK(u3.size() == 6);  // generated by -zeta_3
    auto u12 = roots_of_unity(12);
    CHECK(u12.size() == 12);
    for (const auto& v : u12) CHECK(v.pow(12) == Cyclotomic::one(12));
}

TEST_CASE("rational detection and printing") {
    Cyclotomic z = Cyclotomic::root_of_unity(4, 1);
    CHECK_FALSE(z.is_rational());
    CHECK(z.is_real() == false);
    CHECK((z * z).is_rational());
    CHECK((z * z).rational_value() == -1);
    CHECK(Cyclotomic(4, Rational(3, 2)).str() == "3/2");
    CHECK(z.str() == "z4");
}
