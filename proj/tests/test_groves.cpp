#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combpfaff/errors.hpp"
#include "combpfaff/generators.hpp"
#include "combpfaff/graph_io.hpp"
#include "combpfaff/groves.hpp"
#include "combpfaff/rng.hpp"

using namespace combpfaff;

namespace {

Polynomial var(const char* name) { return Polynomial::variable(name); }

// a -x- i -y- b with interior i
GraphWithBoundary path_graph() {
    GraphWithBoundary g;
    g.add_vertex("a");
    g.add_vertex("i");
    g.add_vertex("b");
    g.add_edge("x", "a", "i", var("x"));
    g.add_edge("y", "i", "b", var("y"));
    g.set_boundary({"a", "b"});
    g.validate();
    return g;
}

// rows x cols grid; the given vertex names become the boundary
GraphWithBoundary grid_graph(int rows, int cols, const std::vector<std::string>& boundary) {
    GraphWithBoundary g;
    auto name = [](int r, int c) {
        return "g" + std::to_string(r + 1) + std::to_string(c + 1);
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) g.add_vertex(name(r, c));
    }
    int next = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) {
            g.add_edge("h" + std::to_string(next++), name(r, c), name(r, c + 1));
        }
    }
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            g.add_edge("w" + std::to_string(next++), name(r, c), name(r + 1, c));
        }
    }
    g.set_boundary(boundary);
    g.validate();
    return g;
}

GraphWithBoundary load_fixture(const char* file) {
    return load_graph(std::string(COMBPFAFF_FIXTURE_DIR) + "/" + file)
        .require_boundary_graph();
}

}  // namespace

TEST_CASE("kirchhoff matrix") {
    GraphWithBoundary single;
    single.add_vertex("u");
    single.add_vertex("v");
    single.add_edge("x", "u", "v", var("x"));
    single.set_boundary({"u"});
    RingMatrix k = kirchhoff(single);
    CHECK(k.at(0, 0).equals(RationalFunction(var("x"))));
    CHECK(k.at(0, 1).equals(-RationalFunction(var("x"))));
    CHECK(k.at(1, 0).equals(-RationalFunction(var("x"))));
    CHECK(k.at(1, 1).equals(RationalFunction(var("x"))));

    GraphWithBoundary edgeless;
    edgeless.add_vertex("u");
    edgeless.set_boundary({"u"});
    CHECK(kirchhoff(edgeless).at(0, 0).is_zero());

    RingMatrix kp = kirchhoff(path_graph());
    CHECK(kp.at(0, 0).equals(RationalFunction(var("x"))));
    CHECK(kp.at(1, 1).equals(RationalFunction(var("x") + var("y"))));
    CHECK(kp.at(2, 2).equals(RationalFunction(var("y"))));
}

TEST_CASE("validation requires boundary in every component") {
    GraphWithBoundary g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("lost");
    g.add_edge("x", "a", "b", var("x"));
    g.set_boundary({"a"});
    CHECK_THROWS_AS(g.validate(), ValidationError);
}

TEST_CASE("singleton-partition sums") {
    GraphWithBoundary g = path_graph();
    CHECK(z_singleton(g) == var("x") + var("y"));
    CHECK(z_singleton_by_enumeration(g) == var("x") + var("y"));

    // all vertices on the boundary: the empty determinant is 1
    GraphWithBoundary flat;
    flat.add_vertex("a");
    flat.add_vertex("b");
    flat.add_edge("x", "a", "b", var("x"));
    flat.set_boundary({"a", "b"});
    CHECK(z_singleton(flat).is_one());
    CHECK(z_singleton_by_enumeration(flat).is_one());

    GraphWithBoundary grid = grid_graph(2, 2, {"g11", "g22"});
    CHECK(z_singleton(grid) == z_singleton_by_enumeration(grid));
    CHECK(matrix_tree_check(grid).pass);
}

TEST_CASE("matrix-tree lemma with gluing on random graphs") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 8; ++trial) {
        int n = rng.int_in(5, 8);
        GraphWithBoundary g =
            random_graph_with_boundary(rng, n, rng.int_in(2, 4), rng.int_in(1, 4));
        VerificationReport r = matrix_tree_check(g);
        CHECK(r.pass);
    }
}

TEST_CASE("grove enumeration") {
    GraphWithBoundary g = path_graph();
    int a = g.vertex_index("a"), b = g.vertex_index("b");
    auto groves = enumerate_groves(g, {a}, {b});
    REQUIRE(groves.size() == 1);
    CHECK(groves[0].edges.size() == 2);
    REQUIRE(groves[0].boundary_partition.size() == 1);
    CHECK(groves[0].boundary_partition[0] == std::vector<int>{a, b});

    // repeats inside a tuple give the empty set
    GraphWithBoundary grid = grid_graph(2, 3, {"g11", "g13", "g21", "g23"});
    int c11 = grid.vertex_index("g11"), c13 = grid.vertex_index("g13");
    int c21 = grid.vertex_index("g21"), c23 = grid.vertex_index("g23");
    CHECK(enumerate_groves(grid, {c11, c11}, {c13, c23}).empty());

    // a and b sharing a vertex is a loud error
    CHECK_THROWS_AS(enumerate_groves(grid, {c11}, {c11}), OverlappingTuples);

    // partitions really are the requested ones
    for (const Grove& grove : enumerate_groves(grid, {c11, c21}, {c13, c23})) {
        REQUIRE(grove.boundary_partition.size() == 2);
        for (const auto& block : grove.boundary_partition) CHECK(block.size() == 2);
    }
}

TEST_CASE("grove sums on the path") {
    GraphWithBoundary g = path_graph();
    int a = g.vertex_index("a"), b = g.vertex_index("b");
    RationalFunction g1 = grove_sum(g, {a}, {b});
    CHECK(g1.equals(RationalFunction(var("x") * var("y"), var("x") + var("y"))));
    CHECK(grove_signed_sum(g, {a}, {b}).equals(g1));
    CHECK(grove_sum(g, {}, {}).is_one());

    // an unconnectable pair has no groves
    GraphWithBoundary two;
    two.add_vertex("a");
    two.add_vertex("b");
    two.add_vertex("c");
    two.add_edge("x", "a", "b", var("x"));
    two.set_boundary({"a", "b", "c"});
    CHECK(grove_sum(two, {two.vertex_index("a")}, {two.vertex_index("c")}).is_zero());
}

TEST_CASE("response matrix") {
    GraphWithBoundary g = path_graph();
    RingMatrix lambda = response_matrix(g);
    RationalFunction want(var("x") * var("y"), var("x") + var("y"));
    CHECK(lambda.at(0, 0).equals(want));
    CHECK(lambda.at(0, 1).equals(-want));
    CHECK(lambda.at(1, 0).equals(-want));
    CHECK(lambda.at(1, 1).equals(want));

    // no interior: the response matrix is the Kirchhoff matrix itself
    GraphWithBoundary flat;
    flat.add_vertex("a");
    flat.add_vertex("b");
    flat.add_edge("x", "a", "b", var("x"));
    flat.set_boundary({"a", "b"});
    CHECK(response_matrix(flat).equals(kirchhoff(flat)));

    // symmetric, zero row sums, off-diagonal entries -G~_1
    SplitMix64 rng(17);
    GraphWithBoundary random_g = random_graph_with_boundary(rng, 6, 3, 2);
    RingMatrix rl = response_matrix(random_g);
    for (std::size_t i = 0; i < rl.rows(); ++i) {
        RationalFunction row_sum;
        for (std::size_t j = 0; j < rl.cols(); ++j) {
            row_sum += rl.at(i, j);
            CHECK(rl.at(i, j).equals(rl.at(j, i)));
        }
        CHECK(row_sum.is_zero());
    }
    const auto& boundary = random_g.boundary();
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        for (std::size_t j = 0; j < boundary.size(); ++j) {
            if (i == j) continue;
            CHECK((-rl.at(i, j))
                      .equals(grove_signed_sum(random_g, {boundary[i]}, {boundary[j]})));
        }
    }
}

TEST_CASE("grove determinant identity") {
    GraphWithBoundary g = path_graph();
    CHECK(grove_determinant_check(g, {g.vertex_index("a")}, {g.vertex_index("b")}).pass);

    GraphWithBoundary grid23 = grid_graph(2, 3, {"g11", "g13", "g21", "g23"});
    VerificationReport r = grove_determinant_check(
        grid23, {grid23.vertex_index("g11"), grid23.vertex_index("g21")},
        {grid23.vertex_index("g13"), grid23.vertex_index("g23")});
    CHECK(r.pass);

    GraphWithBoundary grid33 =
        grid_graph(3, 3, {"g11", "g12", "g13", "g31", "g32", "g33"});
    VerificationReport r3 = grove_determinant_check(
        grid33,
        {grid33.vertex_index("g11"), grid33.vertex_index("g12"), grid33.vertex_index("g13")},
        {grid33.vertex_index("g31"), grid33.vertex_index("g32"), grid33.vertex_index("g33")});
    CHECK(r3.pass);
}

TEST_CASE("grove determinant identity on random graphs") {
    SplitMix64 rng(515);
    for (int trial = 0; trial < 6; ++trial) {
        GraphWithBoundary g = random_graph_with_boundary(rng, rng.int_in(6, 8), 4, 2);
        const auto& boundary = g.boundary();
        std::vector<int> picks = random_distinct(rng, 4, 4);
        std::vector<int> a{boundary[picks[0]], boundary[picks[1]]};
        std::vector<int> b{boundary[picks[2]], boundary[picks[3]]};
        CHECK(grove_determinant_check(g, a, b).pass);
    }
}

TEST_CASE("grove pfaffian identity on the fixtures") {
    GraphWithBoundary grid = load_fixture("grove-grid24.json");
    std::vector<int> a_set, b_set;
    for (const char* v : {"t1", "t2", "t3", "t4"}) a_set.push_back(grid.vertex_index(v));
    for (const char* v : {"u1", "u2", "u3", "u4"}) b_set.push_back(grid.vertex_index(v));
    VerificationReport r = grove_pfaffian_check(grid, a_set, b_set, a_set);
    CHECK(r.pass);
    CHECK(r.lhs != "0");  // the fixture is rich enough to say something

    GraphWithBoundary fan = load_fixture("grove-fan45.json");
    std::vector<int> fa, fb;
    for (const char* v : {"a1", "a2", "a3", "a4"}) fa.push_back(fan.vertex_index(v));
    for (const char* v : {"b1", "b2", "b3", "b4", "b5"}) fb.push_back(fan.vertex_index(v));
    VerificationReport rf = grove_pfaffian_check(fan, fa, fb, fa);
    CHECK(rf.pass);
    CHECK(rf.lhs != "0");

    // A and B must partition the boundary
    CHECK_THROWS_AS(grove_pfaffian_check(grid, a_set, a_set, a_set), OverlappingTuples);
    std::vector<int> short_b(b_set.begin(), b_set.end() - 1);
    CHECK_THROWS_AS(grove_pfaffian_check(grid, a_set, short_b, a_set), ValidationError);
}

TEST_CASE("grove pfaffian follows wherever the determinant identity holds") {
    SplitMix64 rng(616);
    GraphWithBoundary g = random_graph_with_boundary(rng, 7, 4, 2);
    // split the boundary in two and run the even-k pfaffian check
    std::vector<int> a_set{g.boundary()[0], g.boundary()[1]};
    std::vector<int> b_set{g.boundary()[2], g.boundary()[3]};
    VerificationReport r = grove_pfaffian_check(g, a_set, b_set, a_set);
    CHECK(r.pass);
}
