#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combpfaff/digraph.hpp"
#include "combpfaff/errors.hpp"
#include "combpfaff/generators.hpp"
#include "combpfaff/graph_io.hpp"
#include "combpfaff/rng.hpp"

#include <algorithm>

using namespace combpfaff;

namespace {

Polynomial var(const char* name) { return Polynomial::variable(name); }

Digraph fig1() {
    return load_graph(std::string(COMBPFAFF_FIXTURE_DIR) + "/fig1.json").require_digraph();
}

Digraph fig4() {
    return load_graph(std::string(COMBPFAFF_FIXTURE_DIR) + "/fig4.json").require_digraph();
}

int edge_by_id(const Digraph& g, const std::string& id) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).id == id) return static_cast<int>(e);
    }
    FAIL("no edge ", id);
    return -1;
}

}  // namespace

TEST_CASE("path enumeration on the acyclic figure") {
    Digraph g = fig1();
    auto paths = enumerate_paths(g, g.vertex_index("2"), g.vertex_index("4"));
    REQUIRE(paths.size() == 2);
    Polynomial sum;
    for (const auto& p : paths) sum += walk_weight(g, p);
    CHECK(sum == var("c") * var("e") + var("f"));
    CHECK(path_sum(g, g.vertex_index("2"), g.vertex_index("4")).str() == "c*e + f");

    auto loops = enumerate_paths(g, g.vertex_index("1"), g.vertex_index("1"));
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].edges.empty());
    CHECK(path_sum(g, g.vertex_index("1"), g.vertex_index("1")).is_one());

    CHECK_THROWS_AS(enumerate_paths(g, 0, 99), UnknownVertex);
}

TEST_CASE("path sums on the cyclic figure see only simple paths") {
    Digraph g = fig4();
    CHECK(path_sum(g, g.vertex_index("1"), g.vertex_index("3")) == var("a") * var("b"));
    CHECK(path_sum(g, g.vertex_index("2"), g.vertex_index("3")).str() == "b*c*e*f");
}

TEST_CASE("disjoint path families") {
    Digraph g = fig1();
    std::vector<int> a{g.vertex_index("1"), g.vertex_index("2")};
    std::vector<int> b{g.vertex_index("3"), g.vertex_index("4")};
    auto families = disjoint_path_families(g, a, b);
    REQUIRE(families.size() == 1);
    CHECK(family_weight(g, families[0]) == var("a") * var("b") * var("f"));

    // repeated sources can never be disjoint
    CHECK(disjoint_path_families(g, {a[0], a[0]}, b).empty());
}

TEST_CASE("signed path sums") {
    Digraph g1 = fig1();
    Polynomial p2 = signed_path_sum(g1, {g1.vertex_index("1"), g1.vertex_index("2")},
                                    {g1.vertex_index("3"), g1.vertex_index("4")});
    CHECK(p2.str() == "a*b*f - a*d*e");

    CHECK(signed_path_sum(g1, {}, {}).is_one());

    Digraph g4 = fig4();
    Polynomial cyc = signed_path_sum(g4, {g4.vertex_index("1"), g4.vertex_index("2")},
                                     {g4.vertex_index("3"), g4.vertex_index("4")});
    CHECK(cyc == var("a") * var("b") * var("c") * var("e") * var("g"));
}

TEST_CASE("lindstrom check") {
    Digraph g = fig1();
    VerificationReport r = lindstrom_check(g, {g.vertex_index("1"), g.vertex_index("2")},
                                           {g.vertex_index("3"), g.vertex_index("4")});
    CHECK(r.pass);
    CHECK(r.lhs == "a*b*f - a*d*e");
    CHECK(r.rhs == "a*b*f - a*d*e");

    VerificationReport single =
        lindstrom_check(g, {g.vertex_index("2")}, {g.vertex_index("4")});
    CHECK(single.pass);

    CHECK_THROWS_AS(lindstrom_check(fig4(), {0}, {1}), NotAcyclic);
}

TEST_CASE("lindstrom holds on random dags") {
    SplitMix64 rng(321);
    for (int trial = 0; trial < 12; ++trial) {
        int n = rng.int_in(4, 8);
        Digraph g = random_dag(rng, n, rng.int_in(n, 2 * n));
        REQUIRE(g.is_acyclic());
        int k = rng.int_in(1, 3);
        std::vector<int> a = random_distinct(rng, n, k);
        std::vector<int> b = random_distinct(rng, n, k);
        CHECK(lindstrom_check(g, a, b).pass);
    }
}

TEST_CASE("loop erasure") {
    Digraph g = fig4();
    Walk around{g.vertex_index("p"),
                {edge_by_id(g, "d"), edge_by_id(g, "e"), edge_by_id(g, "f")}};
    Walk erased = loop_erase(g, around);
    CHECK(erased.edges.empty());
    CHECK(erased.start == g.vertex_index("p"));

    // 2 -c-> q -e-> r -f-> p -d-> q -e-> r -g-> 4 erases the q,r,p cycle
    Walk w{g.vertex_index("2"),
           {edge_by_id(g, "c"), edge_by_id(g, "e"), edge_by_id(g, "f"), edge_by_id(g, "d"),
            edge_by_id(g, "e"), edge_by_id(g, "g")}};
    Walk le = loop_erase(g, w);
    std::vector<int> expect{edge_by_id(g, "c"), edge_by_id(g, "e"), edge_by_id(g, "g")};
    CHECK(le.edges == expect);

    // erasing a path is the identity, and loop_erase is idempotent
    SplitMix64 rng(8);
    Digraph h = random_digraph(rng, 5, 9);
    for (int trial = 0; trial < 10; ++trial) {
        int a = rng.int_in(0, 4), b = rng.int_in(0, 4);
        for (const Walk& walk : enumerate_walks_bounded(h, a, b, 5)) {
            Walk once = loop_erase(h, walk);
            CHECK(is_simple_path(h, once));
            CHECK(walk_end(h, once) == walk_end(h, walk));
            CHECK(once.start == walk.start);
            CHECK(loop_erase(h, once).edges == once.edges);
        }
    }
}

TEST_CASE("exact walk sums") {
    Digraph g = fig4();
    Polynomial one_minus_def = Polynomial(1) - var("d") * var("e") * var("f");
    CHECK(walk_sum_exact(g, g.vertex_index("1"), g.vertex_index("3"))
              .equals(RationalFunction(var("a") * var("b"), one_minus_def)));
    CHECK(walk_sum_exact(g, g.vertex_index("2"), g.vertex_index("4"))
              .equals(RationalFunction(var("c") * var("e") * var("g"), one_minus_def)));

    Digraph lonely;
    lonely.add_vertex("a");
    CHECK(walk_sum_exact(lonely, 0, 0).is_one());
}

TEST_CASE("walk sums agree with path sums on acyclic graphs") {
    SplitMix64 rng(55);
    Digraph g = random_dag(rng, 6, 9);
    RingMatrix w = walk_matrix(g);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            CHECK(w.at(a, b).equals(RationalFunction(path_sum(g, a, b))));
        }
    }
}

TEST_CASE("bounded walk enumeration") {
    Digraph g = fig4();
    int v1 = g.vertex_index("1"), v3 = g.vertex_index("3");
    CHECK(enumerate_walks_bounded(g, v1, v3, 3).size() == 1);
    CHECK(enumerate_walks_bounded(g, v1, v3, 7).size() == 2);  // one lap of the cycle
    CHECK(enumerate_walks_bounded(g, v1, v3, 8).size() == 3);  // two laps fit in 8 edges
    auto loops = enumerate_walks_bounded(g, v1, v1, 0);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].edges.empty());
}

TEST_CASE("signed walk sums and the fomin check") {
    Digraph g = fig4();
    std::vector<int> a{g.vertex_index("1"), g.vertex_index("2")};
    std::vector<int> b{g.vertex_index("3"), g.vertex_index("4")};

    Polynomial abceg = var("a") * var("b") * var("c") * var("e") * var("g");
    Polynomial def = var("d") * var("e") * var("f");
    CHECK(signed_walk_sum(g, a, b, 12) == abceg * (Polynomial(1) + def + pow(def, 2)));

    CHECK(signed_walk_sum(g, {}, {}, 5).is_one());

    VerificationReport r = fomin_check(g, a, b, 12);
    CHECK(r.pass);

    // on an acyclic graph with a budget beyond every path, walks are paths
    Digraph g1 = fig1();
    std::vector<int> a1{g1.vertex_index("1"), g1.vertex_index("2")};
    std::vector<int> b1{g1.vertex_index("3"), g1.vertex_index("4")};
    CHECK(signed_walk_sum(g1, a1, b1, static_cast<int>(g1.edge_count())) ==
          signed_path_sum(g1, a1, b1));
    CHECK(fomin_check(g1, a1, b1, 10).pass);
}

TEST_CASE("fomin holds on random cyclic digraphs") {
    SplitMix64 rng(77);
    int done = 0;
    while (done < 6) {
        Digraph g = random_digraph(rng, rng.int_in(4, 6), rng.int_in(6, 9));
        if (g.is_acyclic()) continue;
        int k = rng.int_in(1, 2);
        std::vector<int> a = random_distinct(rng, static_cast<int>(g.vertex_count()), k);
        std::vector<int> b = random_distinct(rng, static_cast<int>(g.vertex_count()), k);
        CHECK(fomin_check(g, a, b, 10).pass);
        ++done;
    }
}

TEST_CASE("compatibility diagnostic") {
    // planar two-lane dag sharing a middle vertex
    Digraph g;
    for (const char* v : {"a1", "a2", "m", "b1", "b2"}) g.add_vertex(v);
    g.add_edge("e1", "a1", "m");
    g.add_edge("e2", "a2", "m");
    g.add_edge("e3", "m", "b1");
    g.add_edge("e4", "m", "b2");
    CHECK(is_compatible(g, {g.vertex_index("a1"), g.vertex_index("a2")},
                        {g.vertex_index("b1"), g.vertex_index("b2")}));
    CHECK(is_compatible(g, {g.vertex_index("a1")},
                        {g.vertex_index("b1"), g.vertex_index("b2")}));

    // two crossing but vertex-disjoint paths
    Digraph h;
    for (const char* v : {"a1", "a2", "b1", "b2"}) h.add_vertex(v);
    h.add_edge("e1", "a1", "b2");
    h.add_edge("e2", "a2", "b1");
    CHECK(!is_compatible(h, {h.vertex_index("a1"), h.vertex_index("a2")},
                         {h.vertex_index("b1"), h.vertex_index("b2")}));
}

TEST_CASE("stembridge sums") {
    Digraph g1 = fig1();
    CHECK(stembridge_q(g1, {}, {g1.vertex_index("3")}, FamilyMode::DisjointPaths, -1)
              .is_one());

    Polynomial q2 = stembridge_q(g1, {g1.vertex_index("1"), g1.vertex_index("2")},
                                 {g1.vertex_index("3"), g1.vertex_index("4")},
                                 FamilyMode::DisjointPaths, -1);
    CHECK(q2.str() == "a*b*f - a*d*e");

    Digraph g4 = fig4();
    Polynomial abceg = var("a") * var("b") * var("c") * var("e") * var("g");
    Polynomial def = var("d") * var("e") * var("f");
    Polynomial q2w = stembridge_q(g4, {g4.vertex_index("1"), g4.vertex_index("2")},
                                  {g4.vertex_index("3"), g4.vertex_index("4")},
                                  FamilyMode::LoopErasedWalks, 12);
    CHECK(q2w == abceg * (Polynomial(1) + def + pow(def, 2)));

    CHECK_THROWS_AS(stembridge_q(g4, {0, 1}, {2, 3}, FamilyMode::DisjointPaths, -1),
                    NotAcyclic);
}

TEST_CASE("stembridge check in path mode on random dags") {
    SplitMix64 rng(131);
    for (int trial = 0; trial < 4; ++trial) {
        Digraph g = random_dag(rng, 8, rng.int_in(10, 14));
        std::vector<int> picks = random_distinct(rng, 8, 8);
        std::vector<int> a(picks.begin(), picks.begin() + 4);
        std::vector<int> b(picks.begin() + 4, picks.end());
        VerificationReport r = stembridge_check(g, a, b, FamilyMode::DisjointPaths, -1);
        CHECK(r.pass);
    }
}

TEST_CASE("stembridge check in walk mode needs no compatibility hypothesis") {
    SplitMix64 rng(997);
    int done = 0;
    while (done < 3) {
        Digraph g = random_digraph(rng, 6, rng.int_in(7, 9));
        if (g.is_acyclic()) continue;
        std::vector<int> picks = random_distinct(rng, 6, 6);
        std::vector<int> a(picks.begin(), picks.begin() + 4);
        std::vector<int> b(picks.begin() + 4, picks.end());
        VerificationReport r = stembridge_check(g, a, b, FamilyMode::LoopErasedWalks, 8);
        CHECK(r.pass);
        ++done;
    }

    Digraph g = fig1();
    CHECK_THROWS_AS(
        stembridge_check(g, {0, 1, 2}, {3}, FamilyMode::DisjointPaths, -1), Error);
}

TEST_CASE("walk family spec validation") {
    Digraph g = fig4();
    WalkFamilySpec spec;
    spec.sources = {0, 1};
    spec.sinks = {2};
    CHECK_THROWS_AS(spec.validate(g), Error);
    spec.sinks = {2, 3};
    spec.mode = FamilyMode::LoopErasedWalks;
    CHECK_THROWS_AS(spec.validate(g), Error);  // cyclic graph, no bound
    spec.degree_bound = 10;
    CHECK_NOTHROW(spec.validate(g));
}
