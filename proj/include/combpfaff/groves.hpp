#pragma once

#include "combpfaff/matrix.hpp"
#include "combpfaff/polynomial.hpp"
#include "combpfaff/report.hpp"

#include <string>
#include <vector>

namespace combpfaff {

struct UndirectedEdge {
    std::string id;
    int u = -1;
    int v = -1;
    Polynomial weight;
};

// Undirected weighted graph with an ordered set of boundary vertices; all
// other vertices are interior. Every connected component must contain a
// boundary vertex (checked by validate()).
class GraphWithBoundary {
public:
    int add_vertex(const std::string& name);
    void add_edge(const std::string& id, const std::string& u, const std::string& v);
    void add_edge(const std::string& id, const std::string& u, const std::string& v,
                  Polynomial weight);
    void set_boundary(const std::vector<std::string>& names);  // ordered

    void validate() const;  // throws ValidationError

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    int vertex_index(const std::string& name) const;  // throws UnknownVertex
    const std::vector<UndirectedEdge>& edges() const { return edges_; }

    const std::vector<int>& boundary() const { return boundary_; }  // ordered
    bool is_boundary(int v) const;
    std::vector<int> interior() const;  // in vertex order
    int require_boundary(int v) const;  // boundary position; throws NotBoundaryVertex

private:
    std::vector<std::string> vertex_names_;
    std::vector<UndirectedEdge> edges_;
    std::vector<int> boundary_;
};

// A grove: an acyclic edge subset in which every component contains a
// boundary vertex, together with the partition it induces on the boundary.
struct Grove {
    std::vector<int> edges;  // indices in id order
    std::vector<std::vector<int>> boundary_partition;  // sorted blocks
};

// Weighted graph Laplacian over all vertices: diagonal entries are total
// incident weight, off-diagonal entries minus the weight between the pair.
// Self-loops do not contribute.
RingMatrix kirchhoff(const GraphWithBoundary& g);

// Z_dV, the weighted count of groves inducing the singleton partition,
// computed as det of the interior principal submatrix of K.
Polynomial z_singleton(const GraphWithBoundary& g);
Polynomial z_singleton_by_enumeration(const GraphWithBoundary& g);

// Spanning-tree sum of the graph with all boundary vertices glued into one.
Polynomial glued_spanning_tree_sum(const GraphWithBoundary& g);

// Matrix-tree lemma: enumeration vs det(K_int), plus the gluing identity.
VerificationReport matrix_tree_check(const GraphWithBoundary& g);

// Grove_k(a,b): groves inducing exactly the partition with parts {a_i,b_i}
// and singletons elsewhere. Repeats inside a or inside b give the empty
// set; a vertex shared between a and b raises OverlappingTuples.
std::vector<Grove> enumerate_groves(const GraphWithBoundary& g, const std::vector<int>& a,
                                    const std::vector<int>& b);

Polynomial grove_weight_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                            const std::vector<int>& b);

RationalFunction grove_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                           const std::vector<int>& b);  // G_k

RationalFunction grove_signed_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                                  const std::vector<int>& b);  // G~_k

// Response matrix: Schur complement of K onto the boundary. Its off-diagonal
// entries are -G~_1(a,b).
RingMatrix response_matrix(const GraphWithBoundary& g);

// Checks G~_k(a,b) = det(G~_1(a_i,b_j)) with the left side enumerated and
// the right side read off the response matrix, together with the minor
// identity det(Lambda_{a_i b_j}) = (-1)^k G~_k.
VerificationReport grove_determinant_check(const GraphWithBoundary& g,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b);

// Checks H~_k(a) = Pf(H~_2(a_i,a_j)) for an ordered partition (A, B) of the
// boundary and an even tuple a of A-vertices; each side is computed both by
// grove enumeration and through the minor-family transform.
VerificationReport grove_pfaffian_check(const GraphWithBoundary& g,
                                        const std::vector<int>& a_ordered,
                                        const std::vector<int>& b_ordered,
                                        const std::vector<int>& a);

}  // namespace combpfaff
