#include "combpfaff/generators.hpp"

#include "combpfaff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace combpfaff {

namespace {

RationalFunction random_entry(SplitMix64& rng, int max_abs) {
    return RationalFunction(Rational(rng.int_in(-max_abs, max_abs)));
}

std::string vertex_label(int i) { return "v" + std::to_string(i + 1); }

std::string edge_label(int i) {
    std::string label = "e";
    if (i < 9) label += "0";
    return label + std::to_string(i + 1);
}

}  // namespace

std::vector<int> random_distinct(SplitMix64& rng, int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

RingMatrix random_int_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                             int max_abs) {
    RingMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_entry(rng, max_abs);
    }
    return m;
}

SkewMatrix random_int_skew(SplitMix64& rng, std::size_t n, int max_abs) {
    SkewMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m.set_upper(i, j, random_entry(rng, max_abs));
    }
    return m;
}

MinorFamily random_minor_family(SplitMix64& rng, std::size_t a_size, std::size_t b_size,
                                int max_abs) {
    return MinorFamily(random_int_matrix(rng, a_size, b_size, max_abs));
}

Digraph random_dag(SplitMix64& rng, int vertices, int edges) {
    Digraph g;
    for (int v = 0; v < vertices; ++v) g.add_vertex(vertex_label(v));
    for (int e = 0; e < edges; ++e) {
        int a = rng.int_in(0, vertices - 2);
        int b = rng.int_in(a + 1, vertices - 1);
        g.add_edge(edge_label(e), vertex_label(a), vertex_label(b));
    }
    return g;
}

Digraph random_digraph(SplitMix64& rng, int vertices, int edges) {
    Digraph g;
    for (int v = 0; v < vertices; ++v) g.add_vertex(vertex_label(v));
    for (int e = 0; e < edges; ++e) {
        int a = rng.int_in(0, vertices - 1);
        int b = rng.int_in(0, vertices - 1);
        g.add_edge(edge_label(e), vertex_label(a), vertex_label(b));
    }
    return g;
}

GraphWithBoundary random_graph_with_boundary(SplitMix64& rng, int vertices, int boundary,
                                             int extra_edges) {
    GraphWithBoundary g;
    for (int v = 0; v < vertices; ++v) g.add_vertex(vertex_label(v));
    int next_edge = 0;
    for (int v = 1; v < vertices; ++v) {
        int parent = rng.int_in(0, v - 1);
        g.add_edge(edge_label(next_edge++), vertex_label(parent), vertex_label(v));
    }
    for (int e = 0; e < extra_edges; ++e) {
        int a = rng.int_in(0, vertices - 1);
        int b = rng.int_in(0, vertices - 1);
        if (a == b) b = (b + 1) % vertices;
        g.add_edge(edge_label(next_edge++), vertex_label(a), vertex_label(b));
    }
    std::vector<int> picks = random_distinct(rng, vertices, boundary);
    std::vector<std::string> names;
    for (int v : picks) names.push_back(vertex_label(v));
    g.set_boundary(names);
    g.validate();
    return g;
}

namespace {

struct Point {
    double x, y;
};

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Proper crossing test; segments that share an endpoint never count.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    double d1 = cross(a, b, c);
    double d2 = cross(a, b, d);
    double d3 = cross(c, d, a);
    double d4 = cross(c, d, b);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

PlanarCircularNetwork random_planar_network(SplitMix64& rng, int boundary, int interior,
                                            int extra_interior_edges) {
    if (boundary < 2 || interior < 1) throw Error("network too small");
    const int n = boundary + interior;
    std::vector<Point> position(n);
    Digraph g;
    for (int v = 0; v < boundary; ++v) {
        g.add_vertex("b" + std::to_string(v + 1));
        double angle = -2.0 * M_PI * v / boundary;  // clockwise
        position[v] = Point{std::cos(angle), std::sin(angle)};
    }
    for (int v = 0; v < interior; ++v) {
        g.add_vertex("i" + std::to_string(v + 1));
        double radius = 0.15 + 0.45 * (static_cast<double>(rng.below(1000)) / 1000.0);
        double angle = 2.0 * M_PI * (static_cast<double>(rng.below(10000)) / 10000.0);
        position[boundary + v] = Point{radius * std::cos(angle), radius * std::sin(angle)};
    }

    std::vector<std::pair<int, int>> segments;
    auto crosses_any = [&](int u, int v) {
        for (const auto& [x, y] : segments) {
            if (x == u || x == v || y == u || y == v) continue;
            if (segments_cross(position[u], position[v], position[x], position[y])) {
                return true;
            }
        }
        return false;
    };
    int next_edge = 0;
    auto add_segment = [&](int u, int v) {
        bool forward = rng.coin();
        g.add_edge(edge_label(next_edge++), g.vertex_name(forward ? u : v),
                   g.vertex_name(forward ? v : u));
        segments.emplace_back(u, v);
    };

    // interior skeleton: greedy non-crossing pairs, nearest first
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < interior; ++u) {
        for (int v = u + 1; v < interior; ++v) {
            candidates.emplace_back(boundary + u, boundary + v);
        }
    }
    std::sort(candidates.begin(), candidates.end(), [&](const auto& p, const auto& q) {
        auto d = [&](const std::pair<int, int>& s) {
            double dx = position[s.first].x - position[s.second].x;
            double dy = position[s.first].y - position[s.second].y;
            return dx * dx + dy * dy;
        };
        return d(p) < d(q);
    });
    int wanted = std::min<int>(static_cast<int>(candidates.size()),
                               std::max(0, interior - 1 + extra_interior_edges));
    for (const auto& [u, v] : candidates) {
        if (wanted == 0) break;
        if (crosses_any(u, v)) continue;
        add_segment(u, v);
        --wanted;
    }

    // one edge per boundary vertex, to the nearest reachable interior vertex
    for (int b = 0; b < boundary; ++b) {
        std::vector<int> order(interior);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            auto d = [&](int w) {
                double dx = position[b].x - position[boundary + w].x;
                double dy = position[b].y - position[boundary + w].y;
                return dx * dx + dy * dy;
            };
            return d(u) < d(v);
        });
        bool placed = false;
        for (int w : order) {
            if (!crosses_any(b, boundary + w)) {
                add_segment(b, boundary + w);
                placed = true;
                break;
            }
        }
        if (!placed) throw Error("could not embed a boundary edge without crossings");
    }

    std::vector<int> boundary_order, sources, sinks;
    for (int v = 0; v < boundary; ++v) {
        boundary_order.push_back(v);
        bool outgoing = false;
        for (const auto& e : g.edges()) {
            if (e.tail == v) outgoing = true;
        }
        (outgoing ? sources : sinks).push_back(v);
    }

    std::map<int, std::vector<EdgeEnd>> rotation;
    for (int v = boundary; v < n; ++v) {
        std::vector<std::pair<double, EdgeEnd>> ends;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.edge(e);
            int other = -1;
            bool at_head = false;
            if (edge.tail == v) {
                other = edge.head;
                at_head = false;
            } else if (edge.head == v) {
                other = edge.tail;
                at_head = true;
            } else {
                continue;
            }
            double angle = std::atan2(position[other].y - position[v].y,
                                      position[other].x - position[v].x);
            ends.emplace_back(angle, EdgeEnd{static_cast<int>(e), at_head});
        }
        std::sort(ends.begin(), ends.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
        std::vector<EdgeEnd> ring;
        for (const auto& [angle, end] : ends) ring.push_back(end);
        rotation[v] = std::move(ring);
    }

    PlanarCircularNetwork network(std::move(g), std::move(boundary_order),
                                  std::move(sources), std::move(sinks),
                                  std::move(rotation));
    std::vector<std::string> problems = network.violations();
    if (!problems.empty()) throw Error("generated network is invalid: " + problems[0]);
    return network;
}

}  // namespace combpfaff
