#pragma once

#include "combpfaff/digraph.hpp"
#include "combpfaff/matrix.hpp"
#include "combpfaff/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace combpfaff {

// One end of an edge as seen from the vertex it is incident to. Self-loops
// contribute two ends, distinguished by at_head.
struct EdgeEnd {
    int edge = -1;
    bool at_head = false;

    friend bool operator==(const EdgeEnd& a, const EdgeEnd& b) {
        return a.edge == b.edge && a.at_head == b.at_head;
    }
};

// A planar weighted digraph embedded in a disc: each boundary vertex has
// exactly one incident edge and is a source or a sink by its direction; the
// boundary is totally ordered clockwise; interior vertices carry the cyclic
// order of their incident edge-ends. Planarity of the rotation system is
// trusted, not tested.
class PlanarCircularNetwork {
public:
    PlanarCircularNetwork(Digraph graph, std::vector<int> boundary_order,
                          std::vector<int> sources, std::vector<int> sinks,
                          std::map<int, std::vector<EdgeEnd>> rotation);

    const Digraph& graph() const { return graph_; }
    const std::vector<int>& boundary_order() const { return boundary_order_; }
    const std::vector<int>& sources() const { return sources_; }  // in boundary order
    const std::vector<int>& sinks() const { return sinks_; }      // in boundary order
    bool is_boundary(int v) const;
    bool is_source(int v) const;
    int boundary_position(int v) const;  // throws NotBoundaryVertex
    const std::vector<EdgeEnd>& rotation_at(int v) const;

    // Every violated invariant, one message each; empty means valid.
    std::vector<std::string> violations() const;

private:
    Digraph graph_;
    std::vector<int> boundary_order_;
    std::vector<int> sources_, sinks_;
    std::map<int, std::vector<EdgeEnd>> rotation_;
};

VerificationReport validate_network(const PlanarCircularNetwork& n);

// True iff at every interior vertex the cyclic sequence of subset edges
// strictly alternates toward/away.
bool is_alternating(const PlanarCircularNetwork& n, const std::vector<int>& edge_subset);

// theta(f): sum over touched interior vertices of (deg_f/2 - 1).
// Requires an alternating subset.
int collision_index(const PlanarCircularNetwork& n, const std::vector<int>& edge_subset);

struct AlternatingFlow {
    std::vector<int> edges;    // indices, ascending
    std::vector<int> sources;  // touched boundary sources, in boundary order
    std::vector<int> sinks;    // touched boundary sinks, in boundary order
    int theta = 0;
};

// Whether flows are weighted by 2^theta (the theorem) or not (the negative
// control that shows the factor is required).
enum class CollisionWeighting { PowersOfTwo, Off };

// Flow_k(A',B'): alternating flows touching exactly A' and B' on the
// boundary. Flow_0({},{}) is the conservative set and contains the empty flow.
std::vector<AlternatingFlow> enumerate_flows(const PlanarCircularNetwork& n,
                                             const std::vector<int>& a_set,
                                             const std::vector<int>& b_set);

// F_k(A',B') = (1/C) sum over Flow_k of 2^theta wt.
RationalFunction flow_sum(const PlanarCircularNetwork& n, const std::vector<int>& a_set,
                          const std::vector<int>& b_set);

// sgn(a,b) from inversion counts of a^(A\a) and b^(A\a) in the boundary order.
int flow_sign(const PlanarCircularNetwork& n, const std::vector<int>& a,
              const std::vector<int>& b);

// F~_k(a,b) = sgn(a,b) F_k; 0 when a or b has repeats.
RationalFunction flow_signed_sum(const PlanarCircularNetwork& n,
                                 const std::vector<int>& a, const std::vector<int>& b);

// Rows indexed by sources, columns by the whole boundary: source columns are
// unit vectors, sink columns carry F~_1.
RingMatrix boundary_measurement_matrix(const PlanarCircularNetwork& n);

// Checks F~_k(a,b) = det(F~_1(a_i,b_j)), plus the maximal-minor identity
// det(M_A^{V'}) = F_k(A\V', V'\A) for V' = b + (A\a).
VerificationReport flow_determinant_check(
    const PlanarCircularNetwork& n, const std::vector<int>& a, const std::vector<int>& b,
    CollisionWeighting weighting = CollisionWeighting::PowersOfTwo);

// Checks E~_k(a) = Pf(E~_2(a_i,a_j)) for an even tuple of sources, both by
// flow enumeration and through the minor-family transform.
VerificationReport flow_pfaffian_check(const PlanarCircularNetwork& n,
                                       const std::vector<int>& a);

}  // namespace combpfaff
