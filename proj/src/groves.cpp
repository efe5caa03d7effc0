#include "combpfaff/groves.hpp"

#include "combpfaff/combinatorics.hpp"
#include "combpfaff/det2pf.hpp"
#include "combpfaff/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace combpfaff {

int GraphWithBoundary::add_vertex(const std::string& name) {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<int>(i);
    }
    vertex_names_.push_back(name);
    return static_cast<int>(vertex_names_.size()) - 1;
}

void GraphWithBoundary::add_edge(const std::string& id, const std::string& u,
                                 const std::string& v) {
    add_edge(id, u, v, Polynomial::variable(id));
}

void GraphWithBoundary::add_edge(const std::string& id, const std::string& u,
                                 const std::string& v, Polynomial weight) {
    UndirectedEdge e;
    e.id = id;
    e.u = vertex_index(u);
    e.v = vertex_index(v);
    e.weight = std::move(weight);
    edges_.push_back(std::move(e));
}

void GraphWithBoundary::set_boundary(const std::vector<std::string>& names) {
    boundary_.clear();
    for (const auto& name : names) boundary_.push_back(vertex_index(name));
}

int GraphWithBoundary::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<int>(i);
    }
    throw UnknownVertex("unknown vertex '" + name + "'");
}

bool GraphWithBoundary::is_boundary(int v) const {
    return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end();
}

std::vector<int> GraphWithBoundary::interior() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        if (!is_boundary(static_cast<int>(v))) out.push_back(static_cast<int>(v));
    }
    return out;
}

int GraphWithBoundary::require_boundary(int v) const {
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        if (boundary_[i] == v) return static_cast<int>(i);
    }
    throw NotBoundaryVertex("vertex '" + vertex_name(v) + "' is not a boundary vertex");
}

void GraphWithBoundary::validate() const {
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        for (std::size_t j = i + 1; j < boundary_.size(); ++j) {
            if (boundary_[i] == boundary_[j]) {
                throw ValidationError("boundary lists vertex '" +
                                      vertex_name(boundary_[i]) + "' twice");
            }
        }
    }
    // every connected component must contain a boundary vertex
    std::vector<int> component(vertex_count(), -1);
    int components = 0;
    for (std::size_t start = 0; start < vertex_count(); ++start) {
        if (component[start] != -1) continue;
        int label = components++;
        std::vector<int> stack{static_cast<int>(start)};
        component[start] = label;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                int next = -1;
                if (e.u == v) next = e.v;
                if (e.v == v) next = e.u;
                if (next >= 0 && component[next] == -1) {
                    component[next] = label;
                    stack.push_back(next);
                }
            }
        }
    }
    std::vector<char> touched(components, 0);
    for (int v : boundary_) touched[component[v]] = 1;
    for (int c = 0; c < components; ++c) {
        if (!touched[c]) {
            throw ValidationError("a connected component contains no boundary vertex");
        }
    }
}

RingMatrix kirchhoff(const GraphWithBoundary& g) {
    RingMatrix k(g.vertex_names(), g.vertex_names());
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        RationalFunction w{e.weight};
        k.at(e.u, e.u) += w;
        k.at(e.v, e.v) += w;
        k.at(e.u, e.v) -= w;
        k.at(e.v, e.u) -= w;
    }
    return k;
}

namespace {

Polynomial as_polynomial(const RationalFunction& f) {
    if (!f.is_polynomial()) throw Error("expected a polynomial value");
    return f.num();
}

// Union-find over vertices carrying the boundary-group tag of each root.
// Groups encode the target partition: paired boundary vertices share a
// group, singleton boundary vertices get their own, interior has none.
struct GroveState {
    std::vector<int> parent;
    std::vector<int> tag;  // -1: no boundary vertex in this component

    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    // false if the union would close a cycle or join two different groups
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        if (tag[ru] != -1 && tag[rv] != -1 && tag[ru] != tag[rv]) return false;
        parent[ru] = rv;
        if (tag[rv] == -1) tag[rv] = tag[ru];
        return true;
    }
};

struct EdgeRef {
    int index;
    const UndirectedEdge* edge;
};

std::vector<EdgeRef> edges_by_id(const GraphWithBoundary& g) {
    std::vector<EdgeRef> order;
    order.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        order.push_back({static_cast<int>(e), &g.edges()[e]});
    }
    std::sort(order.begin(), order.end(),
              [](const EdgeRef& x, const EdgeRef& y) { return x.edge->id < y.edge->id; });
    return order;
}

// Enumerates acyclic subsets whose boundary partition refines into the given
// groups, then hands complete groves (pair-connected, no stray component) to
// the visitor.
void for_each_grove(const GraphWithBoundary& g,
                    const std::vector<std::pair<int, int>>& pairs,
                    const std::function<void(const std::vector<int>&, const GroveState&,
                                             const Polynomial&)>& visit) {
    GroveState initial;
    initial.parent.resize(g.vertex_count());
    initial.tag.assign(g.vertex_count(), -1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        initial.parent[v] = static_cast<int>(v);
    }
    int group = 0;
    std::vector<char> in_pair(g.vertex_count(), 0);
    for (const auto& [x, y] : pairs) {
        initial.tag[x] = group;
        initial.tag[y] = group;
        in_pair[x] = in_pair[y] = 1;
        ++group;
    }
    for (int v : g.boundary()) {
        if (!in_pair[v]) initial.tag[v] = group++;
    }

    std::vector<EdgeRef> order = edges_by_id(g);
    std::vector<int> chosen;

    std::function<void(std::size_t, const GroveState&, const Polynomial&)> recurse =
        [&](std::size_t next, const GroveState& state, const Polynomial& weight) {
            if (next == order.size()) {
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    if (state.tag[state.find(static_cast<int>(v))] == -1) return;
                }
                for (const auto& [x, y] : pairs) {
                    if (state.find(x) != state.find(y)) return;
                }
                visit(chosen, state, weight);
                return;
            }
            const EdgeRef& ref = order[next];
            recurse(next + 1, state, weight);
            GroveState included = state;
            if (included.unite(ref.edge->u, ref.edge->v)) {
                chosen.push_back(ref.index);
                recurse(next + 1, included, weight * ref.edge->weight);
                chosen.pop_back();
            }
        };
    recurse(0, initial, Polynomial(1));
}

std::vector<std::pair<int, int>> make_pairs(const GraphWithBoundary& g,
                                            const std::vector<int>& a,
                                            const std::vector<int>& b,
                                            bool& empty_by_convention) {
    if (a.size() != b.size()) throw Error("tuples must have equal length");
    for (int v : a) g.require_boundary(v);
    for (int v : b) g.require_boundary(v);
    for (int x : a) {
        for (int y : b) {
            if (x == y) {
                throw OverlappingTuples("tuples a and b share vertex '" +
                                        g.vertex_name(x) + "'");
            }
        }
    }
    empty_by_convention = false;
    for (std::size_t i = 0; i < a.size() && !empty_by_convention; ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j] || b[i] == b[j]) {
                empty_by_convention = true;
                break;
            }
        }
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
    return pairs;
}

// Grove sums keyed by the canonical pair list, so repeated queries from the
// signed and Pfaffian sums only enumerate once.
class GroveCalculator {
public:
    explicit GroveCalculator(const GraphWithBoundary& g) : g_(g) {}

    const Polynomial& z() {
        if (!z_) {
            z_.emplace(z_singleton(g_));
            if (z_->is_zero()) throw Singular("Z_dV vanishes; check the boundary data");
        }
        return *z_;
    }

    Polynomial pair_sum(const std::vector<int>& a, const std::vector<int>& b) {
        bool empty = false;
        std::vector<std::pair<int, int>> pairs = make_pairs(g_, a, b, empty);
        if (empty) return Polynomial();
        for (auto& [x, y] : pairs) {
            if (x > y) std::swap(x, y);
        }
        std::sort(pairs.begin(), pairs.end());
        auto it = cache_.find(pairs);
        if (it != cache_.end()) return it->second;
        Polynomial total;
        for_each_grove(g_, pairs,
                       [&](const std::vector<int>&, const GroveState&,
                           const Polynomial& weight) { total += weight; });
        cache_.emplace(std::move(pairs), total);
        return total;
    }

    RationalFunction g_k(const std::vector<int>& a, const std::vector<int>& b) {
        if (a.empty()) return RationalFunction(1);
        return RationalFunction(pair_sum(a, b), z());
    }

    RationalFunction g_tilde_k(const std::vector<int>& a, const std::vector<int>& b) {
        RationalFunction total;
        for (const Permutation& sigma : all_permutations(static_cast<int>(a.size()))) {
            std::vector<int> permuted(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) permuted[i] = b[sigma.images[i]];
            RationalFunction term = g_k(a, permuted);
            if (sigma.sign > 0) {
                total += term;
            } else {
                total -= term;
            }
        }
        return total;
    }

private:
    const GraphWithBoundary& g_;
    std::optional<Polynomial> z_;
    std::map<std::vector<std::pair<int, int>>, Polynomial> cache_;
};

}  // namespace

Polynomial z_singleton(const GraphWithBoundary& g) {
    std::vector<int> interior = g.interior();
    RingMatrix k = kirchhoff(g);
    return as_polynomial(determinant(k.submatrix(interior, interior)));
}

Polynomial z_singleton_by_enumeration(const GraphWithBoundary& g) {
    Polynomial total;
    for_each_grove(g, {},
                   [&](const std::vector<int>&, const GroveState&,
                       const Polynomial& weight) { total += weight; });
    return total;
}

Polynomial glued_spanning_tree_sum(const GraphWithBoundary& g) {
    // vertex 0 is the glued boundary; interior vertices follow in order
    std::vector<int> relabel(g.vertex_count(), 0);
    int next = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_boundary(static_cast<int>(v))) relabel[v] = next++;
    }
    const int n = next;

    std::vector<EdgeRef> order = edges_by_id(g);
    Polynomial total;
    std::vector<int> parent(n);

    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int v) {
        while (p[v] != v) v = p[v];
        return v;
    };
    std::function<void(std::size_t, std::vector<int>, int, const Polynomial&)> recurse =
        [&](std::size_t idx, std::vector<int> uf, int merged, const Polynomial& weight) {
            if (merged == n - 1) {
                total += weight;
                return;
            }
            if (idx == order.size()) return;
            // not enough edges left to finish a tree
            if (static_cast<int>(order.size() - idx) < n - 1 - merged) return;
            recurse(idx + 1, uf, merged, weight);
            int u = relabel[order[idx].edge->u];
            int v = relabel[order[idx].edge->v];
            int ru = find(uf, u), rv = find(uf, v);
            if (ru != rv) {
                uf[ru] = rv;
                recurse(idx + 1, std::move(uf), merged + 1,
                        weight * order[idx].edge->weight);
            }
        };
    for (int v = 0; v < n; ++v) parent[v] = v;
    recurse(0, parent, 0, Polynomial(1));
    return total;
}

VerificationReport matrix_tree_check(const GraphWithBoundary& g) {
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "matrix-tree";
    report.inputs["edges"] = std::to_string(g.edge_count());
    Polynomial by_det = z_singleton(g);
    Polynomial by_enum = z_singleton_by_enumeration(g);
    Polynomial by_gluing = glued_spanning_tree_sum(g);
    report.lhs = by_enum.str();
    report.rhs = by_det.str();
    report.pass = by_enum == by_det && by_enum == by_gluing;
    report.details.push_back("glued spanning-tree sum matches: " +
                             std::string(by_enum == by_gluing ? "yes" : "no"));
    report.millis = timer.elapsed_millis();
    return report;
}

std::vector<Grove> enumerate_groves(const GraphWithBoundary& g, const std::vector<int>& a,
                                    const std::vector<int>& b) {
    bool empty = false;
    std::vector<std::pair<int, int>> pairs = make_pairs(g, a, b, empty);
    std::vector<Grove> out;
    if (empty) return out;
    for_each_grove(g, pairs,
                   [&](const std::vector<int>& edges, const GroveState& state,
                       const Polynomial&) {
                       Grove grove;
                       grove.edges = edges;
                       std::sort(grove.edges.begin(), grove.edges.end());
                       std::map<int, std::vector<int>> blocks;
                       for (int v : g.boundary()) blocks[state.find(v)].push_back(v);
                       for (auto& [root, block] : blocks) {
                           std::sort(block.begin(), block.end());
                           grove.boundary_partition.push_back(block);
                       }
                       std::sort(grove.boundary_partition.begin(),
                                 grove.boundary_partition.end());
                       out.push_back(std::move(grove));
                   });
    return out;
}

Polynomial grove_weight_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
    return GroveCalculator(g).pair_sum(a, b);
}

RationalFunction grove_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
    GroveCalculator calc(g);
    return calc.g_k(a, b);
}

RationalFunction grove_signed_sum(const GraphWithBoundary& g, const std::vector<int>& a,
                                  const std::vector<int>& b) {
    GroveCalculator calc(g);
    return calc.g_tilde_k(a, b);
}

RingMatrix response_matrix(const GraphWithBoundary& g) {
    RingMatrix k = kirchhoff(g);
    std::vector<int> boundary = g.boundary();
    std::vector<int> interior = g.interior();
    RingMatrix k_bb = k.submatrix(boundary, boundary);
    if (interior.empty()) return k_bb;
    RingMatrix k_bi = k.submatrix(boundary, interior);
    RingMatrix k_ib = k.submatrix(interior, boundary);
    RingMatrix k_ii = k.submatrix(interior, interior);
    return k_bb - k_bi * matrix_inverse(k_ii) * k_ib;
}

VerificationReport grove_determinant_check(const GraphWithBoundary& g,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b) {
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "grove-det";
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.inputs["a" + std::to_string(i + 1)] = g.vertex_name(a[i]);
        report.inputs["b" + std::to_string(i + 1)] = g.vertex_name(b[i]);
    }
    const std::size_t k = a.size();
    GroveCalculator calc(g);
    RationalFunction lhs = calc.g_tilde_k(a, b);

    RingMatrix lambda = response_matrix(g);
    std::vector<int> a_pos, b_pos;
    for (int v : a) a_pos.push_back(g.require_boundary(v));
    for (int v : b) b_pos.push_back(g.require_boundary(v));
    RingMatrix lambda_minor = lambda.submatrix(a_pos, b_pos);

    RingMatrix g1(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g1.at(i, j) = -lambda_minor.at(i, j);
    }
    RationalFunction rhs = determinant(g1);

    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.pass = lhs.equals(rhs);

    RationalFunction lambda_det = determinant(lambda_minor);
    RationalFunction signed_lhs = (k % 2 == 0) ? lhs : -lhs;
    bool minor_identity = lambda_det.equals(signed_lhs);
    report.details.push_back("det(Lambda minor) = (-1)^k G~_k: " +
                             std::string(minor_identity ? "yes" : "no"));
    report.pass = report.pass && minor_identity;
    report.millis = timer.elapsed_millis();
    return report;
}

VerificationReport grove_pfaffian_check(const GraphWithBoundary& g,
                                        const std::vector<int>& a_ordered,
                                        const std::vector<int>& b_ordered,
                                        const std::vector<int>& a) {
    // (A, B) must partition the boundary into disjoint ordered sets.
    {
        std::vector<int> all = a_ordered;
        all.insert(all.end(), b_ordered.begin(), b_ordered.end());
        std::vector<int> sorted_all = all;
        std::sort(sorted_all.begin(), sorted_all.end());
        if (std::adjacent_find(sorted_all.begin(), sorted_all.end()) != sorted_all.end()) {
            throw OverlappingTuples("A and B must be disjoint");
        }
        std::vector<int> boundary = g.boundary();
        std::sort(boundary.begin(), boundary.end());
        if (sorted_all != boundary) {
            throw ValidationError("A and B must partition the boundary");
        }
    }
    if (a.size() % 2 != 0) throw Error("the tuple a must have even length");
    for (int v : a) {
        if (std::find(a_ordered.begin(), a_ordered.end(), v) == a_ordered.end()) {
            throw Error("tuple entry '" + g.vertex_name(v) + "' is not in A");
        }
    }

    ReportTimer timer;
    VerificationReport report;
    report.theorem = "grove-pf";
    report.inputs["k"] = std::to_string(a.size());
    report.inputs["B_size"] = std::to_string(b_ordered.size());

    const std::size_t k = a.size();
    GroveCalculator calc(g);

    auto h_tilde = [&](const std::vector<int>& tuple) {
        RationalFunction total;
        for (const auto& sel :
             increasing_tuples(static_cast<int>(b_ordered.size()),
                               static_cast<int>(tuple.size()))) {
            std::vector<int> b(sel.size());
            for (std::size_t i = 0; i < sel.size(); ++i) b[i] = b_ordered[sel[i]];
            total += calc.g_tilde_k(tuple, b);
        }
        return total;
    };

    RationalFunction lhs = h_tilde(a);
    SkewMatrix pairwise(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            pairwise.set_upper(i, j, h_tilde({a[i], a[j]}));
        }
    }
    RationalFunction rhs = pfaffian_recursive(pairwise);

    // Same statement through the minor-family transform on the G~_1 table.
    MinorFamily fam([&] {
        std::vector<std::string> rl, cl;
        for (int v : a_ordered) rl.push_back(g.vertex_name(v));
        for (int v : b_ordered) cl.push_back(g.vertex_name(v));
        RingMatrix table(std::move(rl), std::move(cl));
        for (std::size_t i = 0; i < a_ordered.size(); ++i) {
            for (std::size_t j = 0; j < b_ordered.size(); ++j) {
                table.at(i, j) = calc.g_tilde_k({a_ordered[i]}, {b_ordered[j]});
            }
        }
        return table;
    }());
    std::vector<int> positions;
    for (int v : a) {
        positions.push_back(static_cast<int>(
            std::find(a_ordered.begin(), a_ordered.end(), v) - a_ordered.begin()));
    }
    RationalFunction by_family = fam.rtilde_k(positions);
    RationalFunction by_family_pf = pfaffian_recursive(fam.rtilde2_matrix(positions));

    report.lhs = lhs.str();
    report.rhs = rhs.str();
    bool family_matches = by_family.equals(lhs) && by_family_pf.equals(lhs);
    report.details.push_back("minor-family transform agrees: " +
                             std::string(family_matches ? "yes" : "no"));
    report.pass = lhs.equals(rhs) && family_matches;
    report.millis = timer.elapsed_millis();
    return report;
}

}  // namespace combpfaff
