#pragma once

#include "combpfaff/det2pf.hpp"
#include "combpfaff/digraph.hpp"
#include "combpfaff/flows.hpp"
#include "combpfaff/groves.hpp"
#include "combpfaff/rng.hpp"

namespace combpfaff {

// Seeded random instances shared by the CLI suites and the tests. Entry
// magnitudes stay small so failure reports stay readable.

RingMatrix random_int_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                             int max_abs);
SkewMatrix random_int_skew(SplitMix64& rng, std::size_t n, int max_abs);
MinorFamily random_minor_family(SplitMix64& rng, std::size_t a_size, std::size_t b_size,
                                int max_abs);

// Edges only go forward along a hidden topological order.
Digraph random_dag(SplitMix64& rng, int vertices, int edges);

// Arbitrary edges; usually contains directed cycles.
Digraph random_digraph(SplitMix64& rng, int vertices, int edges);

// A random spanning tree plus extra edges; the first `boundary` vertices
// (in a shuffled order) form the ordered boundary.
GraphWithBoundary random_graph_with_boundary(SplitMix64& rng, int vertices, int boundary,
                                             int extra_edges);

// Straight-line embedded network: boundary vertices sit on the unit circle
// (clockwise), interior vertices inside, and only non-crossing segments are
// kept, so the rotation system really is planar.
PlanarCircularNetwork random_planar_network(SplitMix64& rng, int boundary, int interior,
                                            int extra_interior_edges);

// k distinct picks from 0..n-1.
std::vector<int> random_distinct(SplitMix64& rng, int n, int k);

}  // namespace combpfaff
