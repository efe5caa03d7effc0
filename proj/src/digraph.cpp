#include "combpfaff/digraph.hpp"

#include "combpfaff/combinatorics.hpp"
#include "combpfaff/errors.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace combpfaff {

int Digraph::add_vertex(const std::string& name) {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<int>(i);
    }
    vertex_names_.push_back(name);
    adjacency_fresh_ = false;
    return static_cast<int>(vertex_names_.size()) - 1;
}

void Digraph::add_edge(const std::string& id, const std::string& tail,
                       const std::string& head) {
    add_edge(id, tail, head, Polynomial::variable(id));
}

void Digraph::add_edge(const std::string& id, const std::string& tail,
                       const std::string& head, Polynomial weight) {
    DirectedEdge e;
    e.id = id;
    e.tail = vertex_index(tail);
    e.head = vertex_index(head);
    e.weight = std::move(weight);
    edges_.push_back(std::move(e));
    adjacency_fresh_ = false;
}

int Digraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<int>(i);
    }
    throw UnknownVertex("unknown vertex '" + name + "'");
}

void Digraph::refresh_adjacency() const {
    out_.assign(vertex_names_.size(), {});
    std::vector<int> order(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) order[e] = static_cast<int>(e);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return edges_[x].id < edges_[y].id; });
    for (int e : order) out_[edges_[e].tail].push_back(e);
    adjacency_fresh_ = true;
}

const std::vector<int>& Digraph::out_edges(int v) const {
    if (!adjacency_fresh_) refresh_adjacency();
    return out_.at(v);
}

bool Digraph::is_acyclic() const {
    std::vector<int> indegree(vertex_count(), 0);
    for (const auto& e : edges_) ++indegree[e.head];
    std::queue<int> ready;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        if (indegree[v] == 0) ready.push(static_cast<int>(v));
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int e : out_edges(v)) {
            if (--indegree[edges_[e].head] == 0) ready.push(edges_[e].head);
        }
    }
    return seen == vertex_count();
}

int walk_end(const Digraph& g, const Walk& w) {
    return w.edges.empty() ? w.start : g.edge(w.edges.back()).head;
}

std::vector<int> walk_vertices(const Digraph& g, const Walk& w) {
    std::vector<int> vertices{w.start};
    for (int e : w.edges) vertices.push_back(g.edge(e).head);
    return vertices;
}

Polynomial walk_weight(const Digraph& g, const Walk& w) {
    Polynomial weight(1);
    for (int e : w.edges) weight *= g.edge(e).weight;
    return weight;
}

bool is_simple_path(const Digraph& g, const Walk& w) {
    std::vector<int> vertices = walk_vertices(g, w);
    std::sort(vertices.begin(), vertices.end());
    return std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end();
}

Walk loop_erase(const Digraph& g, const Walk& w) {
    Walk result;
    result.start = w.start;
    std::vector<int> vertices{w.start};
    for (int e : w.edges) {
        int next = g.edge(e).head;
        auto seen = std::find(vertices.begin(), vertices.end(), next);
        if (seen != vertices.end()) {
            // erase the cycle back to the first occurrence of `next`
            std::size_t keep = static_cast<std::size_t>(seen - vertices.begin());
            vertices.resize(keep + 1);
            result.edges.resize(keep);
        } else {
            vertices.push_back(next);
            result.edges.push_back(e);
        }
    }
    return result;
}

void WalkFamilySpec::validate(const Digraph& g) const {
    if (sources.size() != sinks.size()) {
        throw Error("source and sink tuples must have equal length");
    }
    if (mode == FamilyMode::LoopErasedWalks && !degree_bound && !g.is_acyclic()) {
        throw Error("walk families on a cyclic graph require a degree bound");
    }
}

namespace {

void check_vertex(const Digraph& g, int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
        throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
    }
}

void paths_dfs(const Digraph& g, int v, int b, std::vector<char>& visited,
               std::vector<int>& stack, const std::vector<char>& blocked,
               std::vector<Walk>& out, int start) {
    if (v == b) {
        out.push_back(Walk{start, stack});
        return;
    }
    for (int e : g.out_edges(v)) {
        int next = g.edge(e).head;
        if (visited[next] || blocked[next]) continue;
        visited[next] = 1;
        stack.push_back(e);
        paths_dfs(g, next, b, visited, stack, blocked, out, start);
        stack.pop_back();
        visited[next] = 0;
    }
}

std::vector<Walk> enumerate_paths_avoiding(const Digraph& g, int a, int b,
                                           const std::vector<char>& blocked) {
    check_vertex(g, a);
    check_vertex(g, b);
    std::vector<Walk> out;
    if (blocked[a] || blocked[b]) return out;
    std::vector<char> visited(g.vertex_count(), 0);
    visited[a] = 1;
    std::vector<int> stack;
    paths_dfs(g, a, b, visited, stack, blocked, out, a);
    return out;
}

void walks_dfs(const Digraph& g, int v, int b, int budget, std::vector<int>& stack,
               const std::vector<char>& blocked, std::vector<Walk>& out, int start) {
    if (v == b) out.push_back(Walk{start, stack});
    if (budget == 0) return;
    for (int e : g.out_edges(v)) {
        int next = g.edge(e).head;
        if (blocked[next]) continue;
        stack.push_back(e);
        walks_dfs(g, next, b, budget - 1, stack, blocked, out, start);
        stack.pop_back();
    }
}

std::vector<Walk> enumerate_walks_avoiding(const Digraph& g, int a, int b, int max_edges,
                                           const std::vector<char>& blocked) {
    check_vertex(g, a);
    check_vertex(g, b);
    std::vector<Walk> out;
    if (max_edges < 0 || blocked[a] || blocked[b]) return out;
    std::vector<int> stack;
    walks_dfs(g, a, b, max_edges, stack, blocked, out, a);
    return out;
}

}  // namespace

std::vector<Walk> enumerate_paths(const Digraph& g, int a, int b) {
    return enumerate_paths_avoiding(g, a, b, std::vector<char>(g.vertex_count(), 0));
}

Polynomial path_sum(const Digraph& g, int a, int b) {
    Polynomial sum;
    for (const Walk& p : enumerate_paths(g, a, b)) sum += walk_weight(g, p);
    return sum;
}

namespace {

void family_recurse(const Digraph& g, const std::vector<int>& a, const std::vector<int>& b,
                    std::size_t i, std::vector<char>& blocked,
                    std::vector<std::vector<Walk>>& out, std::vector<Walk>& current) {
    if (i == a.size()) {
        out.push_back(current);
        return;
    }
    for (const Walk& p : enumerate_paths_avoiding(g, a[i], b[i], blocked)) {
        std::vector<int> vertices = walk_vertices(g, p);
        for (int v : vertices) blocked[v] = 1;
        current.push_back(p);
        family_recurse(g, a, b, i + 1, blocked, out, current);
        current.pop_back();
        for (int v : vertices) blocked[v] = 0;
    }
}

}  // namespace

std::vector<std::vector<Walk>> disjoint_path_families(const Digraph& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b) {
    if (a.size() != b.size()) throw Error("tuples must have equal length");
    std::vector<std::vector<Walk>> out;
    std::vector<char> blocked(g.vertex_count(), 0);
    std::vector<Walk> current;
    family_recurse(g, a, b, 0, blocked, out, current);
    return out;
}

Polynomial family_weight(const Digraph& g, const std::vector<Walk>& family) {
    Polynomial weight(1);
    for (const Walk& w : family) weight *= walk_weight(g, w);
    return weight;
}

Polynomial signed_path_sum(const Digraph& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
    if (a.size() != b.size()) throw Error("tuples must have equal length");
    Polynomial total;
    for (const Permutation& sigma : all_permutations(static_cast<int>(a.size()))) {
        std::vector<int> permuted(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) permuted[i] = b[sigma.images[i]];
        Polynomial sum;
        for (const auto& family : disjoint_path_families(g, a, permuted)) {
            sum += family_weight(g, family);
        }
        if (sigma.sign > 0) {
            total += sum;
        } else {
            total -= sum;
        }
    }
    return total;
}

RingMatrix path_matrix(const Digraph& g, const std::vector<int>& a,
                       const std::vector<int>& b) {
    std::vector<std::string> rl, cl;
    for (int v : a) rl.push_back(g.vertex_name(v));
    for (int v : b) cl.push_back(g.vertex_name(v));
    RingMatrix m(std::move(rl), std::move(cl));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            m.at(i, j) = RationalFunction(path_sum(g, a[i], b[j]));
        }
    }
    return m;
}

VerificationReport lindstrom_check(const Digraph& g, const std::vector<int>& a,
                                   const std::vector<int>& b) {
    if (!g.is_acyclic()) {
        throw NotAcyclic("the path determinant identity needs an acyclic graph");
    }
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "lindstrom";
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.inputs["a" + std::to_string(i + 1)] = g.vertex_name(a[i]);
        report.inputs["b" + std::to_string(i + 1)] = g.vertex_name(b[i]);
    }
    Polynomial lhs = signed_path_sum(g, a, b);
    RationalFunction rhs = determinant(path_matrix(g, a, b));
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.pass = RationalFunction(lhs).equals(rhs);
    report.millis = timer.elapsed_millis();
    return report;
}

RingMatrix walk_matrix(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    RingMatrix adjacency(g.vertex_names(), g.vertex_names());
    for (const auto& e : g.edges()) {
        adjacency.at(e.tail, e.head) += RationalFunction(e.weight);
    }
    return matrix_inverse(RingMatrix::identity(n) - adjacency);
}

RationalFunction walk_sum_exact(const Digraph& g, int a, int b) {
    check_vertex(g, a);
    check_vertex(g, b);
    return walk_matrix(g).at(a, b);
}

std::vector<Walk> enumerate_walks_bounded(const Digraph& g, int a, int b, int max_edges) {
    return enumerate_walks_avoiding(g, a, b, max_edges,
                                    std::vector<char>(g.vertex_count(), 0));
}

namespace {

void walk_family_recurse(const Digraph& g, const std::vector<int>& a,
                         const std::vector<int>& b, std::size_t i,
                         std::vector<char>& blocked, int budget,
                         std::vector<std::vector<Walk>>& out,
                         std::vector<Walk>& current) {
    if (i == a.size()) {
        out.push_back(current);
        return;
    }
    for (const Walk& w : enumerate_walks_avoiding(g, a[i], b[i], budget, blocked)) {
        std::vector<int> le_vertices = walk_vertices(g, loop_erase(g, w));
        std::vector<int> newly_blocked;
        for (int v : le_vertices) {
            if (!blocked[v]) {
                blocked[v] = 1;
                newly_blocked.push_back(v);
            }
        }
        current.push_back(w);
        walk_family_recurse(g, a, b, i + 1, blocked,
                            budget - static_cast<int>(w.edges.size()), out, current);
        current.pop_back();
        for (int v : newly_blocked) blocked[v] = 0;
    }
}

}  // namespace

std::vector<std::vector<Walk>> walk_families_bounded(const Digraph& g,
                                                     const std::vector<int>& a,
                                                     const std::vector<int>& b,
                                                     int max_edges) {
    if (a.size() != b.size()) throw Error("tuples must have equal length");
    std::vector<std::vector<Walk>> out;
    std::vector<char> blocked(g.vertex_count(), 0);
    std::vector<Walk> current;
    walk_family_recurse(g, a, b, 0, blocked, max_edges, out, current);
    return out;
}

Polynomial signed_walk_sum(const Digraph& g, const std::vector<int>& a,
                           const std::vector<int>& b, int max_edges) {
    if (a.size() != b.size()) throw Error("tuples must have equal length");
    Polynomial total;
    for (const Permutation& sigma : all_permutations(static_cast<int>(a.size()))) {
        std::vector<int> permuted(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) permuted[i] = b[sigma.images[i]];
        Polynomial sum;
        for (const auto& family : walk_families_bounded(g, a, permuted, max_edges)) {
            sum += family_weight(g, family);
        }
        if (sigma.sign > 0) {
            total += sum;
        } else {
            total -= sum;
        }
    }
    return total;
}

VerificationReport fomin_check(const Digraph& g, const std::vector<int>& a,
                               const std::vector<int>& b, int degree) {
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "fomin";
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.inputs["a" + std::to_string(i + 1)] = g.vertex_name(a[i]);
        report.inputs["b" + std::to_string(i + 1)] = g.vertex_name(b[i]);
    }
    report.inputs["degree"] = std::to_string(degree);

    RingMatrix all = walk_matrix(g);
    RingMatrix minor = all.submatrix(a, b);
    RationalFunction det = determinant(minor);

    Polynomial lhs = signed_walk_sum(g, a, b, degree);
    Polynomial rhs = det.series(degree);
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.pass = lhs == rhs;
    report.details.push_back("det(W) = " + det.str());
    report.millis = timer.elapsed_millis();
    return report;
}

bool is_compatible(const Digraph& g, const std::vector<int>& a_ordered,
                   const std::vector<int>& b_ordered) {
    std::unordered_map<long long, std::vector<Walk>> cache;
    auto paths = [&](int s, int t) -> const std::vector<Walk>& {
        long long key = static_cast<long long>(s) * static_cast<long long>(g.vertex_count()) + t;
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, enumerate_paths(g, s, t)).first;
        return it->second;
    };
    for (std::size_t i = 0; i < a_ordered.size(); ++i) {
        for (std::size_t i2 = i + 1; i2 < a_ordered.size(); ++i2) {
            for (std::size_t j = 0; j < b_ordered.size(); ++j) {
                for (std::size_t j2 = j + 1; j2 < b_ordered.size(); ++j2) {
                    for (const Walk& p : paths(a_ordered[i], b_ordered[j2])) {
                        std::vector<int> pv = walk_vertices(g, p);
                        std::sort(pv.begin(), pv.end());
                        for (const Walk& q : paths(a_ordered[i2], b_ordered[j])) {
                            bool intersects = false;
                            for (int v : walk_vertices(g, q)) {
                                if (std::binary_search(pv.begin(), pv.end(), v)) {
                                    intersects = true;
                                    break;
                                }
                            }
                            if (!intersects) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

Polynomial stembridge_q(const Digraph& g, const std::vector<int>& a,
                        const std::vector<int>& b_ordered, FamilyMode mode, int degree) {
    const int k = static_cast<int>(a.size());
    for (std::size_t i = 0; i < b_ordered.size(); ++i) {
        for (std::size_t j = i + 1; j < b_ordered.size(); ++j) {
            if (b_ordered[i] == b_ordered[j]) {
                throw Error("ordered boundary set contains a duplicate vertex");
            }
        }
    }
    if (mode == FamilyMode::DisjointPaths && !g.is_acyclic()) {
        throw NotAcyclic("path mode requires an acyclic graph");
    }
    if (mode == FamilyMode::LoopErasedWalks && degree < 0) {
        throw Error("walk mode requires a degree bound");
    }
    Polynomial total;
    for (const auto& tuple : increasing_tuples(static_cast<int>(b_ordered.size()), k)) {
        std::vector<int> b(tuple.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) b[i] = b_ordered[tuple[i]];
        if (mode == FamilyMode::DisjointPaths) {
            total += signed_path_sum(g, a, b);
        } else {
            total += signed_walk_sum(g, a, b, degree);
        }
    }
    return total;
}

VerificationReport stembridge_check(const Digraph& g, const std::vector<int>& a,
                                    const std::vector<int>& b_ordered, FamilyMode mode,
                                    int degree) {
    if (a.size() % 2 != 0) throw Error("the tuple a must have even length");
    ReportTimer timer;
    VerificationReport report;
    report.theorem = mode == FamilyMode::DisjointPaths ? "stembridge" : "stembridge-walks";
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.inputs["a" + std::to_string(i + 1)] = g.vertex_name(a[i]);
    }
    std::string b_names;
    for (int v : b_ordered) {
        if (!b_names.empty()) b_names += ",";
        b_names += g.vertex_name(v);
    }
    report.inputs["B"] = b_names;
    if (mode == FamilyMode::LoopErasedWalks) report.inputs["degree"] = std::to_string(degree);

    const std::size_t k = a.size();
    Polynomial lhs = stembridge_q(g, a, b_ordered, mode, degree);
    SkewMatrix pairwise(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            Polynomial q2 = stembridge_q(g, {a[i], a[j]}, b_ordered, mode, degree);
            pairwise.set_upper(i, j, RationalFunction(q2));
        }
    }
    RationalFunction pf = pfaffian_recursive(pairwise);
    Polynomial rhs = pf.num();  // entries are polynomials, so den = 1
    if (mode == FamilyMode::LoopErasedWalks) rhs = rhs.truncated(degree);
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.pass = lhs == rhs;
    report.millis = timer.elapsed_millis();
    return report;
}

}  // namespace combpfaff
