#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combpfaff/det2pf.hpp"
#include "combpfaff/errors.hpp"
#include "combpfaff/generators.hpp"
#include "combpfaff/matrix.hpp"
#include "combpfaff/polynomial.hpp"
#include "combpfaff/rational_function.hpp"
#include "combpfaff/rng.hpp"

using namespace combpfaff;

namespace {

Polynomial var(const char* name) { return Polynomial::variable(name); }

Polynomial product(std::initializer_list<const char*> names) {
    Polynomial p(1);
    for (const char* name : names) p *= var(name);
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic matches the worked products") {
    Polynomial ce = product({"c", "e"});
    Polynomial f = var("f");
    CHECK((ce + f).str() == "c*e + f");

    Polynomial p = product({"a", "b"}) + var("f");
    CHECK(p * Polynomial(1) == p);

    Polynomial ab = product({"a", "b"});
    Polynomial ceg = product({"c", "e", "g"});
    Polynomial one_minus_def = Polynomial(1) - product({"d", "e", "f"});
    Polynomial expanded = ab * ceg * one_minus_def;
    CHECK(expanded == product({"a", "b", "c", "e", "g"}) -
                          product({"a", "b", "c", "d", "f", "g"}) * pow(var("e"), 2));
    CHECK(expanded.str() == "-a*b*c*d*e^2*f*g + a*b*c*e*g");
}

TEST_CASE("polynomial rendering is canonical") {
    Polynomial p = product({"a", "b", "f"}) - product({"a", "d", "e"});
    CHECK(p.str() == "a*b*f - a*d*e");
    CHECK(Polynomial().str() == "0");
    CHECK((Polynomial(1) - product({"d", "e", "f"})).str() == "1 - d*e*f");
    CHECK((Polynomial(Rational(-3)) * var("x") * var("x")).str() == "-3*x^2");
}

TEST_CASE("rational function arithmetic") {
    RationalFunction ab_over(product({"a", "b"}), Polynomial(1) - product({"d", "e", "f"}));
    RationalFunction ceg(product({"c", "e", "g"}));
    RationalFunction got = ab_over * ceg;
    RationalFunction want(product({"a", "b", "c", "e", "g"}),
                          Polynomial(1) - product({"d", "e", "f"}));
    CHECK(got.equals(want));

    SUBCASE("f / f = 1") {
        CHECK((ab_over / ab_over).equals(RationalFunction(1)));
    }

    SUBCASE("cancellation up to cross-multiplication") {
        Polynomial one_minus_def = Polynomial(1) - product({"d", "e", "f"});
        RationalFunction big(product({"a", "b"}) * product({"c", "e", "g"}) * one_minus_def);
        RationalFunction got2 = big / RationalFunction(one_minus_def * one_minus_def);
        RationalFunction want2(product({"a", "b"}) * product({"c", "e", "g"}),
                               one_minus_def);
        CHECK(got2.equals(want2));
    }

    SUBCASE("division by zero") {
        CHECK_THROWS_AS(ceg / RationalFunction(), DivisionByZero);
    }
}

TEST_CASE("rational function equality is cross-multiplicative") {
    RationalFunction x_over_x(var("x"), var("x"));
    CHECK(x_over_x.equals(RationalFunction(1)));

    Polynomial one_minus_def = Polynomial(1) - product({"d", "e", "f"});
    Polynomial one_plus_def = Polynomial(1) + product({"d", "e", "f"});
    RationalFunction lhs(product({"a", "b"}), one_minus_def);
    RationalFunction rhs(product({"a", "b"}) * one_plus_def,
                         one_minus_def * one_plus_def);
    CHECK(lhs.equals(rhs));
    CHECK(!lhs.equals(RationalFunction(product({"a", "b"}))));
}

TEST_CASE("equality is a congruence for addition") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial n1(Rational(rng.int_in(-9, 9)));
        Polynomial d1 = var("x") * Rational(rng.int_in(1, 9));
        RationalFunction f(n1 * var("y"), d1);
        RationalFunction g(n1 * var("y") * var("z"), d1 * var("z"));
        RationalFunction h(Polynomial(Rational(rng.int_in(-9, 9))), var("y"));
        RationalFunction k(h.num() * var("x"), h.den() * var("x"));
        REQUIRE(f.equals(g));
        REQUIRE(h.equals(k));
        CHECK((f + h).equals(g + k));
    }
}

TEST_CASE("determinant on the worked 2x2 path matrix") {
    RingMatrix m(2, 2);
    m.at(0, 0) = RationalFunction(product({"a", "b"}));
    m.at(0, 1) = RationalFunction(product({"a", "e"}));
    m.at(1, 0) = RationalFunction(product({"b", "c"}) + var("d"));
    m.at(1, 1) = RationalFunction(product({"c", "e"}) + var("f"));
    RationalFunction det = determinant(m);
    CHECK(det.str() == "a*b*f - a*d*e");
}

TEST_CASE("determinant conventions and guards") {
    CHECK(determinant(RingMatrix(0, 0)).is_one());
    CHECK(determinant(RingMatrix::identity(5)).is_one());
    CHECK_THROWS_AS(determinant(RingMatrix(2, 3)), NotSquare);
    CHECK_THROWS_AS(determinant(RingMatrix(13, 13)), MatrixTooLarge);
}

TEST_CASE("determinant of the walk matrix minor") {
    Polynomial one_minus_def = Polynomial(1) - product({"d", "e", "f"});
    RingMatrix m(2, 2);
    m.at(0, 0) = RationalFunction(product({"a", "b"}), one_minus_def);
    m.at(0, 1) = RationalFunction(product({"a", "d", "e", "g"}), one_minus_def);
    m.at(1, 0) = RationalFunction(product({"b", "c", "e", "f"}), one_minus_def);
    m.at(1, 1) = RationalFunction(product({"c", "e", "g"}), one_minus_def);
    RationalFunction want(product({"a", "b"}) * product({"c", "e", "g"}), one_minus_def);
    CHECK(determinant(m).equals(want));
}

TEST_CASE("determinant is alternating in rows") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        RingMatrix m = random_int_matrix(rng, 4, 4, 9);
        int r1 = rng.int_in(0, 3);
        int r2 = rng.int_in(0, 3);
        if (r1 == r2) r2 = (r2 + 1) % 4;
        std::vector<int> swapped{0, 1, 2, 3};
        std::swap(swapped[r1], swapped[r2]);
        RingMatrix swapped_m = m.submatrix(swapped, {0, 1, 2, 3});
        CHECK((determinant(m) + determinant(swapped_m)).is_zero());
    }
}

TEST_CASE("matrix inverse") {
    RingMatrix one_by_one(1, 1);
    one_by_one.at(0, 0) = RationalFunction(var("x"));
    RingMatrix inv = matrix_inverse(one_by_one);
    CHECK(inv.at(0, 0).equals(RationalFunction(Polynomial(1), var("x"))));

    CHECK(matrix_inverse(RingMatrix::identity(4)).equals(RingMatrix::identity(4)));

    SplitMix64 rng(7);
    RingMatrix m = random_int_matrix(rng, 3, 3, 9);
    while (determinant(m).is_zero()) m = random_int_matrix(rng, 3, 3, 9);
    CHECK((m * matrix_inverse(m)).equals(RingMatrix::identity(3)));

    RingMatrix singular(2, 2);
    singular.at(0, 0) = RationalFunction(var("x"));
    singular.at(0, 1) = RationalFunction(var("x"));
    singular.at(1, 0) = RationalFunction(var("x"));
    singular.at(1, 1) = RationalFunction(var("x"));
    CHECK_THROWS_AS(matrix_inverse(singular), Singular);
}

namespace {

SkewMatrix figure_skew() {
    SkewMatrix m(4);
    m.set_upper(0, 1, RationalFunction(var("a")));
    m.set_upper(0, 2, RationalFunction(var("b")));
    m.set_upper(0, 3, RationalFunction(var("c")));
    m.set_upper(1, 2, RationalFunction(var("d")));
    m.set_upper(1, 3, RationalFunction(var("e")));
    m.set_upper(2, 3, RationalFunction(var("f")));
    return m;
}

}  // namespace

TEST_CASE("pfaffian by matchings on the 4x4 figure") {
    RationalFunction pf = pfaffian_matchings(figure_skew());
    CHECK(pf.str() == "a*f - b*e + c*d");
    CHECK(pfaffian_matchings(SkewMatrix(0)).is_one());
    CHECK(pfaffian_matchings(SkewMatrix::all_ones(6)).equals(RationalFunction(1)));
    CHECK(pfaffian_matchings(SkewMatrix::all_ones(5)).is_zero());
}

TEST_CASE("pfaffian by recursion agrees and squares to the determinant") {
    CHECK(pfaffian_recursive(figure_skew()).str() == "a*f - b*e + c*d");
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(pfaffian_recursive(SkewMatrix::all_ones(2 * n)).equals(RationalFunction(1)));
    }
    SplitMix64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        SkewMatrix m = random_int_skew(rng, 6, 9);
        RationalFunction pf_rec = pfaffian_recursive(m);
        RationalFunction pf_match = pfaffian_matchings(m);
        CHECK(pf_rec.equals(pf_match));
        CHECK((pf_rec * pf_rec).equals(determinant(m.to_ring_matrix())));
    }
    SkewMatrix odd = random_int_skew(rng, 5, 9);
    CHECK(pfaffian_recursive(odd).is_zero());
    CHECK(pfaffian_matchings(odd).is_zero());
}

TEST_CASE("pfaffian squared equals determinant symbolically") {
    RationalFunction pf = pfaffian_matchings(figure_skew());
    RationalFunction det = determinant(figure_skew().to_ring_matrix());
    CHECK((pf * pf).equals(det));
}

TEST_CASE("series truncation") {
    Polynomial def = product({"d", "e", "f"});
    Polynomial series = Polynomial(1) + def + pow(def, 2) + pow(def, 3);
    CHECK(series_truncate(series, 8) == Polynomial(1) + def + pow(def, 2));
    Polynomial p = product({"a", "b"}) + var("c");
    CHECK(series_truncate(p, p.total_degree()) == p);
    CHECK(series_truncate(Polynomial(), 5).is_zero());
}

TEST_CASE("series inverse") {
    Polynomial def = product({"d", "e", "f"});
    Polynomial inv = series_inverse(Polynomial(1) - def, 9);
    CHECK(inv == Polynomial(1) + def + pow(def, 2) + pow(def, 3));
    CHECK(series_inverse(Polynomial(1), 4).is_one());
    CHECK_THROWS_AS(series_inverse(var("x"), 3), NonUnitConstantTerm);

    SplitMix64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        Polynomial p(1);
        p += var("x") * Rational(rng.int_in(-4, 4));
        p += var("y") * Rational(rng.int_in(-4, 4));
        p += var("x") * var("y") * Rational(rng.int_in(-4, 4));
        int degree = rng.int_in(3, 7);
        Polynomial q = series_inverse(p, degree);
        CHECK((p * q).truncated(degree).is_one());
    }
}
