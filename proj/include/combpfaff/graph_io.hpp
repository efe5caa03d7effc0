#pragma once

#include "combpfaff/digraph.hpp"
#include "combpfaff/flows.hpp"
#include "combpfaff/groves.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace combpfaff {

enum class GraphKind { Digraph, UndirectedBoundary, PlanarCircular };

std::string graph_kind_name(GraphKind kind);

// A parsed and validated graph file; exactly one of the three members is set
// according to `kind`.
struct LoadedGraph {
    GraphKind kind = GraphKind::Digraph;
    std::string name;
    std::optional<Digraph> digraph;
    std::optional<GraphWithBoundary> boundary_graph;
    std::optional<PlanarCircularNetwork> network;

    const Digraph& require_digraph() const;
    const GraphWithBoundary& require_boundary_graph() const;
    const PlanarCircularNetwork& require_network() const;
    std::size_t edge_count() const;
};

// Graph files are line-delimited JSON records; see docs/graph-format.md.
// Throws ParseError (with file:line) or ValidationError.
LoadedGraph load_graph(const std::string& path);
LoadedGraph parse_graph(std::istream& in, const std::string& source_name);

}  // namespace combpfaff
