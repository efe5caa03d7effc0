#pragma once

#include "combpfaff/matrix.hpp"
#include "combpfaff/polynomial.hpp"
#include "combpfaff/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace combpfaff {

struct DirectedEdge {
    std::string id;
    int tail = -1;
    int head = -1;
    Polynomial weight;  // the edge's formal variable unless overridden
};

// Directed graph with identifier-addressed vertices and edges. Parallel
// edges and self-loops are permitted; acyclicity is a computed property.
class Digraph {
public:
    int add_vertex(const std::string& name);
    void add_edge(const std::string& id, const std::string& tail, const std::string& head);
    void add_edge(const std::string& id, const std::string& tail, const std::string& head,
                  Polynomial weight);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    int vertex_index(const std::string& name) const;  // throws UnknownVertex
    const std::vector<DirectedEdge>& edges() const { return edges_; }
    const DirectedEdge& edge(int e) const { return edges_.at(e); }

    // Out-edges sorted by edge id, so enumeration order is reproducible.
    const std::vector<int>& out_edges(int v) const;

    bool is_acyclic() const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<DirectedEdge> edges_;
    mutable std::vector<std::vector<int>> out_;
    mutable bool adjacency_fresh_ = false;
    void refresh_adjacency() const;
};

// A walk is a start vertex plus a contiguous edge sequence; the empty walk
// at a vertex is allowed and has weight 1. A path is a walk with no
// repeated vertex.
struct Walk {
    int start = -1;
    std::vector<int> edges;
};

int walk_end(const Digraph& g, const Walk& w);
std::vector<int> walk_vertices(const Digraph& g, const Walk& w);
Polynomial walk_weight(const Digraph& g, const Walk& w);
bool is_simple_path(const Digraph& g, const Walk& w);

// Traverses w and deletes each cycle the moment it closes; the result is a
// simple path with the same endpoints, and loop_erase is idempotent.
Walk loop_erase(const Digraph& g, const Walk& w);

enum class FamilyMode { DisjointPaths, LoopErasedWalks };

// The (a, b, mode, degree bound) data that selects a family of path/walk
// systems. The degree bound is mandatory in walk mode on cyclic graphs.
struct WalkFamilySpec {
    std::vector<int> sources;
    std::vector<int> sinks;
    FamilyMode mode = FamilyMode::DisjointPaths;
    std::optional<int> degree_bound;

    void validate(const Digraph& g) const;
};

std::vector<Walk> enumerate_paths(const Digraph& g, int a, int b);
Polynomial path_sum(const Digraph& g, int a, int b);  // P(a,b)

// Families (p_1..p_k), p_i from a_i to b_i, pairwise vertex-disjoint with
// endpoints included. Repeated endpoints force an empty result.
std::vector<std::vector<Walk>> disjoint_path_families(const Digraph& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b);

Polynomial family_weight(const Digraph& g, const std::vector<Walk>& family);

Polynomial signed_path_sum(const Digraph& g, const std::vector<int>& a,
                           const std::vector<int>& b);  // P~_k

RingMatrix path_matrix(const Digraph& g, const std::vector<int>& a,
                       const std::vector<int>& b);  // (P(a_i,b_j))

VerificationReport lindstrom_check(const Digraph& g, const std::vector<int>& a,
                                   const std::vector<int>& b);

// All-pairs W(a,b) as (I - A)^{-1} over the edge-variable field.
RingMatrix walk_matrix(const Digraph& g);
RationalFunction walk_sum_exact(const Digraph& g, int a, int b);  // W(a,b)

std::vector<Walk> enumerate_walks_bounded(const Digraph& g, int a, int b, int max_edges);

// Families (w_1..w_k), w_i from a_i to b_i, where each w_j avoids every
// vertex of LE(w_i) for i < j, and the total edge count is at most max_edges.
std::vector<std::vector<Walk>> walk_families_bounded(const Digraph& g,
                                                     const std::vector<int>& a,
                                                     const std::vector<int>& b,
                                                     int max_edges);

Polynomial signed_walk_sum(const Digraph& g, const std::vector<int>& a,
                           const std::vector<int>& b, int max_edges);  // W~_k truncated

VerificationReport fomin_check(const Digraph& g, const std::vector<int>& a,
                               const std::vector<int>& b, int degree);

// Exhaustive compatibility test: every pair of paths a->b', a'->b with a<a'
// and b<b' must share a vertex. Diagnostic only, never used as a gate.
bool is_compatible(const Digraph& g, const std::vector<int>& a_ordered,
                   const std::vector<int>& b_ordered);

// Q_k / Q~_k: sum of the signed family sum over strictly increasing tuples
// drawn from the ordered set B.
Polynomial stembridge_q(const Digraph& g, const std::vector<int>& a,
                        const std::vector<int>& b_ordered, FamilyMode mode, int degree);

VerificationReport stembridge_check(const Digraph& g, const std::vector<int>& a,
                                    const std::vector<int>& b_ordered, FamilyMode mode,
                                    int degree);

}  // namespace combpfaff
