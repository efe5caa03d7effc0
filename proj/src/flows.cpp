#include "combpfaff/flows.hpp"

#include "combpfaff/combinatorics.hpp"
#include "combpfaff/det2pf.hpp"
#include "combpfaff/errors.hpp"

#include <algorithm>
#include <functional>

namespace combpfaff {

PlanarCircularNetwork::PlanarCircularNetwork(Digraph graph,
                                             std::vector<int> boundary_order,
                                             std::vector<int> sources,
                                             std::vector<int> sinks,
                                             std::map<int, std::vector<EdgeEnd>> rotation)
    : graph_(std::move(graph)),
      boundary_order_(std::move(boundary_order)),
      rotation_(std::move(rotation)) {
    // keep sources and sinks in boundary order
    for (int v : boundary_order_) {
        if (std::find(sources.begin(), sources.end(), v) != sources.end()) {
            sources_.push_back(v);
        }
        if (std::find(sinks.begin(), sinks.end(), v) != sinks.end()) {
            sinks_.push_back(v);
        }
    }
}

bool PlanarCircularNetwork::is_boundary(int v) const {
    return std::find(boundary_order_.begin(), boundary_order_.end(), v) !=
           boundary_order_.end();
}

bool PlanarCircularNetwork::is_source(int v) const {
    return std::find(sources_.begin(), sources_.end(), v) != sources_.end();
}

int PlanarCircularNetwork::boundary_position(int v) const {
    for (std::size_t i = 0; i < boundary_order_.size(); ++i) {
        if (boundary_order_[i] == v) return static_cast<int>(i);
    }
    throw NotBoundaryVertex("vertex '" + graph_.vertex_name(v) +
                            "' is not on the boundary");
}

const std::vector<EdgeEnd>& PlanarCircularNetwork::rotation_at(int v) const {
    static const std::vector<EdgeEnd> kEmpty;
    auto it = rotation_.find(v);
    return it == rotation_.end() ? kEmpty : it->second;
}

std::vector<std::string> PlanarCircularNetwork::violations() const {
    std::vector<std::string> out;
    const Digraph& g = graph_;

    std::vector<int> sorted_boundary = boundary_order_;
    std::sort(sorted_boundary.begin(), sorted_boundary.end());
    if (std::adjacent_find(sorted_boundary.begin(), sorted_boundary.end()) !=
        sorted_boundary.end()) {
        out.push_back("boundary order lists a vertex twice");
    }

    std::vector<int> degree(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        ++degree[e.tail];
        ++degree[e.head];
    }
    for (int v : boundary_order_) {
        if (degree[v] != 1) {
            out.push_back("boundary vertex '" + g.vertex_name(v) + "' has " +
                          std::to_string(degree[v]) + " incident edge-ends, wants 1");
        }
    }

    // sources and sinks partition the boundary and match edge directions
    std::vector<int> classified = sources_;
    classified.insert(classified.end(), sinks_.begin(), sinks_.end());
    std::sort(classified.begin(), classified.end());
    if (std::adjacent_find(classified.begin(), classified.end()) != classified.end()) {
        out.push_back("a boundary vertex is both source and sink");
    }
    if (classified != sorted_boundary) {
        out.push_back("sources and sinks do not partition the boundary");
    }
    for (const auto& e : g.edges()) {
        if (is_boundary(e.tail) && !is_source(e.tail) &&
            std::find(sinks_.begin(), sinks_.end(), e.tail) != sinks_.end()) {
            out.push_back("sink '" + g.vertex_name(e.tail) + "' has an outgoing edge");
        }
        if (is_boundary(e.head) && is_source(e.head)) {
            out.push_back("source '" + g.vertex_name(e.head) + "' has an incoming edge");
        }
    }

    // rotations must list each incident edge-end of each interior vertex once
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (is_boundary(static_cast<int>(v))) continue;
        std::vector<EdgeEnd> expected;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).tail == static_cast<int>(v)) {
                expected.push_back({static_cast<int>(e), false});
            }
            if (g.edge(e).head == static_cast<int>(v)) {
                expected.push_back({static_cast<int>(e), true});
            }
        }
        std::vector<EdgeEnd> listed = rotation_at(static_cast<int>(v));
        auto key = [](const EdgeEnd& end) { return end.edge * 2 + (end.at_head ? 1 : 0); };
        std::vector<int> a, b;
        for (const auto& end : expected) a.push_back(key(end));
        for (const auto& end : listed) b.push_back(key(end));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            out.push_back("rotation at '" + g.vertex_name(static_cast<int>(v)) +
                          "' does not list each incident edge-end exactly once");
        }
    }
    return out;
}

VerificationReport validate_network(const PlanarCircularNetwork& n) {
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "network-valid";
    report.inputs["edges"] = std::to_string(n.graph().edge_count());
    report.details = n.violations();
    report.pass = report.details.empty();
    report.lhs = report.pass ? "valid" : "invalid";
    report.rhs = "valid";
    report.millis = timer.elapsed_millis();
    return report;
}

namespace {

// Per-end membership state while scanning subsets.
enum class EndState { Undecided, In, Out };

struct RingView {
    std::vector<EndState> states;  // parallel to the rotation list
    std::vector<bool> toward;      // orientation of each end: true = into v
};

bool ring_feasible(const RingView& ring) {
    const std::size_t m = ring.states.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (ring.states[i] != EndState::In) continue;
        // next non-Out position, cyclically (may come back to i)
        std::size_t j = (i + 1) % m;
        while (j != i && ring.states[j] == EndState::Out) j = (j + 1) % m;
        if (j == i) return false;  // a lone selected end never alternates
        if (ring.states[j] == EndState::In && ring.toward[j] == ring.toward[i]) {
            return false;
        }
    }
    return true;
}

struct FlowKey {
    std::vector<int> sources, sinks;
    bool operator<(const FlowKey& other) const {
        if (sources != other.sources) return sources < other.sources;
        return sinks < other.sinks;
    }
};

class FlowTable {
public:
    explicit FlowTable(const PlanarCircularNetwork& n) : n_(n) { scan(); }

    const std::vector<AlternatingFlow>& flows(const std::vector<int>& a_set,
                                              const std::vector<int>& b_set) const {
        static const std::vector<AlternatingFlow> kEmpty;
        auto it = groups_.find(FlowKey{ordered(a_set), ordered(b_set)});
        return it == groups_.end() ? kEmpty : it->second;
    }

    Polynomial generating_sum(const std::vector<int>& a_set, const std::vector<int>& b_set,
                              CollisionWeighting weighting) const {
        Polynomial total;
        for (const AlternatingFlow& flow : flows(a_set, b_set)) {
            Polynomial weight(1);
            for (int e : flow.edges) weight *= n_.graph().edge(e).weight;
            if (weighting == CollisionWeighting::PowersOfTwo) {
                weight *= Rational(Integer(1) << flow.theta);
            }
            total += weight;
        }
        return total;
    }

    Polynomial normalizer(CollisionWeighting weighting) const {
        return generating_sum({}, {}, weighting);
    }

    RationalFunction f_k(const std::vector<int>& a_set, const std::vector<int>& b_set,
                         CollisionWeighting weighting) const {
        if (a_set.size() != b_set.size()) {
            throw SourceSinkMismatch("flows connect equal numbers of sources and sinks");
        }
        return RationalFunction(generating_sum(a_set, b_set, weighting),
                                normalizer(weighting));
    }

    RationalFunction f_tilde(const std::vector<int>& a, const std::vector<int>& b,
                             CollisionWeighting weighting) const {
        auto has_repeat = [](std::vector<int> t) {
            std::sort(t.begin(), t.end());
            return std::adjacent_find(t.begin(), t.end()) != t.end();
        };
        if (has_repeat(a) || has_repeat(b)) return RationalFunction();
        RationalFunction value = f_k(a, b, weighting);
        return flow_sign(n_, a, b) > 0 ? value : -value;
    }

    // order a set of boundary vertices by boundary position
    std::vector<int> ordered(std::vector<int> set) const {
        std::sort(set.begin(), set.end(), [&](int x, int y) {
            return n_.boundary_position(x) < n_.boundary_position(y);
        });
        return set;
    }

private:
    void scan() {
        const Digraph& g = n_.graph();
        const std::size_t m = g.edge_count();

        // interior ring views, aligned with each vertex's rotation list
        std::map<int, RingView> rings;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            int vi = static_cast<int>(v);
            if (n_.is_boundary(vi)) continue;
            const auto& rotation = n_.rotation_at(vi);
            if (rotation.empty()) continue;
            RingView ring;
            for (const EdgeEnd& end : rotation) {
                ring.states.push_back(EndState::Undecided);
                ring.toward.push_back(end.at_head);
            }
            rings.emplace(vi, std::move(ring));
        }

        // process edges in id order for reproducible flow listings
        std::vector<int> order(m);
        for (std::size_t e = 0; e < m; ++e) order[e] = static_cast<int>(e);
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return g.edge(x).id < g.edge(y).id; });

        std::vector<char> chosen(m, 0);

        auto set_edge = [&](int e, EndState state, std::vector<int>& touched) {
            for (int v : {g.edge(e).tail, g.edge(e).head}) {
                auto it = rings.find(v);
                if (it == rings.end()) continue;
                const auto& rotation = n_.rotation_at(v);
                for (std::size_t p = 0; p < rotation.size(); ++p) {
                    if (rotation[p].edge == e) {
                        it->second.states[p] = state;
                        touched.push_back(v);
                    }
                }
            }
        };

        std::function<void(std::size_t)> recurse = [&](std::size_t idx) {
            if (idx == m) {
                emit(chosen, rings);
                return;
            }
            int e = order[idx];
            for (EndState state : {EndState::Out, EndState::In}) {
                std::vector<int> touched;
                set_edge(e, state, touched);
                chosen[e] = state == EndState::In;
                bool feasible = true;
                for (int v : touched) {
                    if (!ring_feasible(rings.at(v))) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) recurse(idx + 1);
                chosen[e] = 0;
                std::vector<int> undo;
                set_edge(e, EndState::Undecided, undo);
            }
        };
        recurse(0);
    }

    void emit(const std::vector<char>& chosen, const std::map<int, RingView>& rings) {
        const Digraph& g = n_.graph();
        AlternatingFlow flow;
        for (std::size_t e = 0; e < chosen.size(); ++e) {
            if (chosen[e]) flow.edges.push_back(static_cast<int>(e));
        }
        for (int v : n_.boundary_order()) {
            bool touched = false;
            for (int e : flow.edges) {
                if (g.edge(e).tail == v || g.edge(e).head == v) {
                    touched = true;
                    break;
                }
            }
            if (!touched) continue;
            if (n_.is_source(v)) {
                flow.sources.push_back(v);
            } else {
                flow.sinks.push_back(v);
            }
        }
        flow.theta = 0;
        for (const auto& [v, ring] : rings) {
            int deg = 0;
            for (EndState s : ring.states) {
                if (s == EndState::In) ++deg;
            }
            if (deg > 0) flow.theta += deg / 2 - 1;
        }
        if (flow.sources.size() != flow.sinks.size()) {
            throw Error("internal: alternating flow with |A'| != |B'|");
        }
        FlowKey key{flow.sources, flow.sinks};
        groups_[key].push_back(std::move(flow));
    }

    const PlanarCircularNetwork& n_;
    std::map<FlowKey, std::vector<AlternatingFlow>> groups_;
};

void require_sources(const PlanarCircularNetwork& n, const std::vector<int>& vs) {
    for (int v : vs) {
        if (!n.is_source(v)) {
            throw NotBoundaryVertex("vertex '" + n.graph().vertex_name(v) +
                                    "' is not a boundary source");
        }
    }
}

void require_sinks(const PlanarCircularNetwork& n, const std::vector<int>& vs) {
    for (int v : vs) {
        n.boundary_position(v);
        if (n.is_source(v)) {
            throw NotBoundaryVertex("vertex '" + n.graph().vertex_name(v) +
                                    "' is not a boundary sink");
        }
    }
}

}  // namespace

bool is_alternating(const PlanarCircularNetwork& n, const std::vector<int>& edge_subset) {
    const Digraph& g = n.graph();
    std::vector<char> in_subset(g.edge_count(), 0);
    for (int e : edge_subset) in_subset.at(e) = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int vi = static_cast<int>(v);
        if (n.is_boundary(vi)) continue;
        const auto& rotation = n.rotation_at(vi);
        RingView ring;
        for (const EdgeEnd& end : rotation) {
            ring.states.push_back(in_subset[end.edge] ? EndState::In : EndState::Out);
            ring.toward.push_back(end.at_head);
        }
        if (!ring_feasible(ring)) return false;
    }
    return true;
}

int collision_index(const PlanarCircularNetwork& n, const std::vector<int>& edge_subset) {
    if (!is_alternating(n, edge_subset)) {
        throw Error("collision index of a non-alternating edge subset");
    }
    const Digraph& g = n.graph();
    std::vector<char> in_subset(g.edge_count(), 0);
    for (int e : edge_subset) in_subset.at(e) = 1;
    int theta = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int vi = static_cast<int>(v);
        if (n.is_boundary(vi)) continue;
        int deg = 0;
        for (const EdgeEnd& end : n.rotation_at(vi)) {
            if (in_subset[end.edge]) ++deg;
        }
        if (deg > 0) theta += deg / 2 - 1;
    }
    return theta;
}

std::vector<AlternatingFlow> enumerate_flows(const PlanarCircularNetwork& n,
                                             const std::vector<int>& a_set,
                                             const std::vector<int>& b_set) {
    require_sources(n, a_set);
    require_sinks(n, b_set);
    if (a_set.size() != b_set.size()) {
        throw SourceSinkMismatch("flows connect equal numbers of sources and sinks");
    }
    FlowTable table(n);
    return table.flows(a_set, b_set);
}

RationalFunction flow_sum(const PlanarCircularNetwork& n, const std::vector<int>& a_set,
                          const std::vector<int>& b_set) {
    require_sources(n, a_set);
    require_sinks(n, b_set);
    FlowTable table(n);
    return table.f_k(a_set, b_set, CollisionWeighting::PowersOfTwo);
}

int flow_sign(const PlanarCircularNetwork& n, const std::vector<int>& a,
              const std::vector<int>& b) {
    std::vector<int> rest;  // A \ a, in boundary order
    for (int v : n.sources()) {
        if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
    }
    auto inversions = [&](std::vector<int> tuple) {
        tuple.insert(tuple.end(), rest.begin(), rest.end());
        int count = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                if (n.boundary_position(tuple[i]) > n.boundary_position(tuple[j])) {
                    ++count;
                }
            }
        }
        return count;
    };
    return (inversions(a) + inversions(b)) % 2 == 0 ? 1 : -1;
}

RationalFunction flow_signed_sum(const PlanarCircularNetwork& n,
                                 const std::vector<int>& a, const std::vector<int>& b) {
    require_sources(n, a);
    require_sinks(n, b);
    FlowTable table(n);
    return table.f_tilde(a, b, CollisionWeighting::PowersOfTwo);
}

namespace {

RingMatrix measurement_matrix(const PlanarCircularNetwork& n, const FlowTable& table,
                              CollisionWeighting weighting) {
    std::vector<std::string> row_labels, col_labels;
    for (int v : n.sources()) row_labels.push_back(n.graph().vertex_name(v));
    for (int v : n.boundary_order()) col_labels.push_back(n.graph().vertex_name(v));
    RingMatrix m(std::move(row_labels), std::move(col_labels));
    for (std::size_t i = 0; i < n.sources().size(); ++i) {
        for (std::size_t j = 0; j < n.boundary_order().size(); ++j) {
            int v = n.boundary_order()[j];
            if (n.is_source(v)) {
                m.at(i, j) = v == n.sources()[i] ? RationalFunction(1) : RationalFunction();
            } else {
                m.at(i, j) = table.f_tilde({n.sources()[i]}, {v}, weighting);
            }
        }
    }
    return m;
}

}  // namespace

RingMatrix boundary_measurement_matrix(const PlanarCircularNetwork& n) {
    FlowTable table(n);
    return measurement_matrix(n, table, CollisionWeighting::PowersOfTwo);
}

VerificationReport flow_determinant_check(const PlanarCircularNetwork& n,
                                          const std::vector<int>& a,
                                          const std::vector<int>& b,
                                          CollisionWeighting weighting) {
    require_sources(n, a);
    require_sinks(n, b);
    if (a.size() != b.size()) {
        throw SourceSinkMismatch("tuples must have equal length");
    }
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "flow-det";
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.inputs["a" + std::to_string(i + 1)] = n.graph().vertex_name(a[i]);
        report.inputs["b" + std::to_string(i + 1)] = n.graph().vertex_name(b[i]);
    }
    if (weighting == CollisionWeighting::Off) report.inputs["weighting"] = "off";

    const std::size_t k = a.size();
    FlowTable table(n);
    RationalFunction lhs = table.f_tilde(a, b, weighting);

    RingMatrix f1(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            f1.at(i, j) = table.f_tilde({a[i]}, {b[j]}, weighting);
        }
    }
    RationalFunction rhs = determinant(f1);
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.pass = lhs.equals(rhs);

    // Talaska's maximal minor: V' = b + (A \ a), columns in boundary order.
    RingMatrix m = measurement_matrix(n, table, weighting);
    std::vector<int> vprime = b;
    for (int v : n.sources()) {
        if (std::find(a.begin(), a.end(), v) == a.end()) vprime.push_back(v);
    }
    vprime = table.ordered(vprime);
    std::vector<int> rows, cols;
    for (std::size_t i = 0; i < n.sources().size(); ++i) rows.push_back(static_cast<int>(i));
    for (int v : vprime) cols.push_back(n.boundary_position(v));
    RationalFunction minor_det = determinant(m.submatrix(rows, cols));
    RationalFunction f_plain = table.f_k(a, b, weighting);
    bool minor_identity = minor_det.equals(f_plain);
    report.details.push_back("det(M_A^{V'}) = F_k: " +
                             std::string(minor_identity ? "yes" : "no"));
    report.pass = report.pass && minor_identity;
    report.millis = timer.elapsed_millis();
    return report;
}

VerificationReport flow_pfaffian_check(const PlanarCircularNetwork& n,
                                       const std::vector<int>& a) {
    require_sources(n, a);
    if (a.size() % 2 != 0) throw Error("the tuple a must have even length");
    ReportTimer timer;
    VerificationReport report;
    report.theorem = "flow-pf";
    report.inputs["k"] = std::to_string(a.size());

    const std::size_t k = a.size();
    const std::vector<int>& sinks = n.sinks();
    FlowTable table(n);

    auto e_tilde = [&](const std::vector<int>& tuple) {
        RationalFunction total;
        for (const auto& sel : increasing_tuples(static_cast<int>(sinks.size()),
                                                 static_cast<int>(tuple.size()))) {
            std::vector<int> b(sel.size());
            for (std::size_t i = 0; i < sel.size(); ++i) b[i] = sinks[sel[i]];
            total += table.f_tilde(tuple, b, CollisionWeighting::PowersOfTwo);
        }
        return total;
    };

    RationalFunction lhs = e_tilde(a);
    SkewMatrix pairwise(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            pairwise.set_upper(i, j, e_tilde({a[i], a[j]}));
        }
    }
    RationalFunction rhs = pfaffian_recursive(pairwise);

    // Minor-family route over the F~_1 table.
    MinorFamily fam([&] {
        std::vector<std::string> rl, cl;
        for (int v : n.sources()) rl.push_back(n.graph().vertex_name(v));
        for (int v : sinks) cl.push_back(n.graph().vertex_name(v));
        RingMatrix t(std::move(rl), std::move(cl));
        for (std::size_t i = 0; i < n.sources().size(); ++i) {
            for (std::size_t j = 0; j < sinks.size(); ++j) {
                t.at(i, j) = table.f_tilde({n.sources()[i]}, {sinks[j]},
                                           CollisionWeighting::PowersOfTwo);
            }
        }
        return t;
    }());
    std::vector<int> positions;
    for (int v : a) {
        for (std::size_t i = 0; i < n.sources().size(); ++i) {
            if (n.sources()[i] == v) positions.push_back(static_cast<int>(i));
        }
    }
    RationalFunction by_family = fam.rtilde_k(positions);
    RationalFunction by_family_pf = pfaffian_recursive(fam.rtilde2_matrix(positions));
    bool family_matches = by_family.equals(lhs) && by_family_pf.equals(lhs);

    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.details.push_back("minor-family transform agrees: " +
                             std::string(family_matches ? "yes" : "no"));
    report.pass = lhs.equals(rhs) && family_matches;
    report.millis = timer.elapsed_millis();
    return report;
}

}  // namespace combpfaff
