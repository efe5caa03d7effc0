#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combpfaff/det2pf.hpp"
#include "combpfaff/digraph.hpp"
#include "combpfaff/errors.hpp"
#include "combpfaff/generators.hpp"
#include "combpfaff/graph_io.hpp"
#include "combpfaff/rng.hpp"

using namespace combpfaff;

namespace {

MinorFamily fig1_path_family() {
    Digraph g =
        load_graph(std::string(COMBPFAFF_FIXTURE_DIR) + "/fig1.json").require_digraph();
    MinorFamily fam({"1", "2"}, {"3", "4"});
    const char* a_names[2] = {"1", "2"};
    const char* b_names[2] = {"3", "4"};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            fam.set(i, j,
                    RationalFunction(path_sum(g, g.vertex_index(a_names[i]),
                                              g.vertex_index(b_names[j]))));
        }
    }
    return fam;
}

}  // namespace

TEST_CASE("ctilde minors") {
    MinorFamily fam = fig1_path_family();
    CHECK(fam.ctilde_k({}, {}).is_one());
    CHECK(fam.ctilde_k({1}, {0}).equals(fam.at(1, 0)));
    CHECK(fam.ctilde_k({0, 1}, {0, 1}).str() == "a*b*f - a*d*e");
    CHECK_THROWS_AS(fam.ctilde_k({0, 2}, {0, 1}), IndexOutOfFamily);
}

TEST_CASE("rtilde sums") {
    MinorFamily fam = fig1_path_family();
    CHECK(fam.rtilde_k({}).is_one());
    // |B| = k: the single increasing tuple is all of B
    CHECK(fam.rtilde_k({0, 1}).equals(fam.ctilde_k({0, 1}, {0, 1})));
    // k beyond |B| is an empty sum
    CHECK(fam.rtilde_k({0, 1, 0}).is_zero());

    // brute-force expansion over all ten column pairs of a random 4x5 table
    SplitMix64 rng(42);
    MinorFamily table = random_minor_family(rng, 4, 5, 9);
    std::vector<int> a{1, 3};
    RationalFunction direct;
    for (int b1 = 0; b1 < 5; ++b1) {
        for (int b2 = b1 + 1; b2 < 5; ++b2) {
            direct += table.at(a[0], b1) * table.at(a[1], b2) -
                      table.at(a[0], b2) * table.at(a[1], b1);
        }
    }
    CHECK(table.rtilde_k(a).equals(direct));
}

TEST_CASE("pfaffian principle") {
    SUBCASE("k = 2 collapses to the defining entry") {
        SplitMix64 rng(1);
        MinorFamily fam = random_minor_family(rng, 3, 4, 9);
        VerificationReport r = pfaffian_principle_check(fam, {0, 2});
        CHECK(r.pass);
    }
    SUBCASE("random 4x6 table") {
        SplitMix64 rng(2);
        MinorFamily fam = random_minor_family(rng, 4, 6, 9);
        VerificationReport r = pfaffian_principle_check(fam, {0, 1, 2, 3});
        CHECK(r.pass);
    }
    SUBCASE("path-sum instantiation") {
        MinorFamily fam = fig1_path_family();
        VerificationReport r = pfaffian_principle_check(fam, {0, 1});
        CHECK(r.pass);
        CHECK(fam.rtilde_k({0, 1}).str() == "a*b*f - a*d*e");
    }
    SUBCASE("odd tuples are rejected") {
        SplitMix64 rng(3);
        MinorFamily fam = random_minor_family(rng, 3, 4, 9);
        CHECK_THROWS_AS(pfaffian_principle_check(fam, {0, 1, 2}), Error);
    }
}

TEST_CASE("pfaffian principle across many seeded tables") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t rows = 4 + rng.below(3);  // 4..6
        std::size_t cols = 4 + rng.below(5);  // 4..8
        MinorFamily fam = random_minor_family(rng, rows, cols, 9);
        std::vector<int> a = random_distinct(rng, static_cast<int>(rows), 4);
        CHECK(fam.rtilde_k(a).equals(pfaffian_recursive(fam.rtilde2_matrix(a))));
    }
}

TEST_CASE("the DMD^T construction") {
    SplitMix64 rng(7);
    MinorFamily fam = random_minor_family(rng, 4, 5, 9);
    std::vector<int> a{0, 1, 2, 3};
    RingMatrix dmd = dmd_construction(fam, a);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(dmd.at(i, i).is_zero());
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK((dmd.at(i, j) + dmd.at(j, i)).is_zero());
            if (i != j) {
                CHECK(dmd.at(i, j).equals(fam.rtilde_k({a[i], a[j]})));
            }
        }
    }
    SkewMatrix skew(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) skew.set_upper(i, j, dmd.at(i, j));
    }
    CHECK(pfaffian_recursive(skew).equals(fam.rtilde_k(a)));

    // no columns at all: the product collapses to the zero matrix
    MinorFamily empty_cols(std::vector<std::string>{"x", "y"}, {});
    RingMatrix zero = dmd_construction(empty_cols, {0, 1});
    CHECK(zero.at(0, 1).is_zero());
}

TEST_CASE("minor summation identity") {
    SUBCASE("identity D gives Pf(M) on both sides") {
        SplitMix64 rng(11);
        SkewMatrix m = random_int_skew(rng, 4, 9);
        VerificationReport r = minor_summation_check(RingMatrix::identity(4), m);
        CHECK(r.pass);
        CHECK(r.lhs == pfaffian_recursive(m).str());
    }
    SUBCASE("random rectangular cases") {
        SplitMix64 rng(12);
        VerificationReport r1 =
            minor_summation_check(random_int_matrix(rng, 2, 4, 9), random_int_skew(rng, 4, 9));
        CHECK(r1.pass);
        VerificationReport r2 =
            minor_summation_check(random_int_matrix(rng, 4, 6, 9), random_int_skew(rng, 6, 9));
        CHECK(r2.pass);
        VerificationReport r3 =
            minor_summation_check(random_int_matrix(rng, 4, 8, 9), random_int_skew(rng, 8, 9));
        CHECK(r3.pass);
    }
    SUBCASE("shape guards") {
        SplitMix64 rng(13);
        CHECK_THROWS_AS(
            minor_summation_check(random_int_matrix(rng, 3, 4, 9), random_int_skew(rng, 4, 9)),
            Error);
        CHECK_THROWS_AS(
            minor_summation_check(random_int_matrix(rng, 4, 3, 9), random_int_skew(rng, 3, 9)),
            Error);
    }
}

TEST_CASE("all-ones pfaffians") {
    CHECK(allones_pfaffian(0).is_one());
    CHECK(allones_pfaffian(8).is_one());
    CHECK(allones_pfaffian(3).is_zero());
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(allones_pfaffian(2 * n).equals(RationalFunction(1)));
        CHECK(pfaffian_matchings(SkewMatrix::all_ones(2 * n)).equals(RationalFunction(1)));
    }
}
