#include "combpfaff/graph_io.hpp"

#include "combpfaff/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace combpfaff {

using nlohmann::json;

std::string graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::Digraph:
            return "digraph";
        case GraphKind::UndirectedBoundary:
            return "undirected-boundary";
        case GraphKind::PlanarCircular:
            return "planar-circular";
    }
    return "?";
}

const Digraph& LoadedGraph::require_digraph() const {
    if (!digraph) throw WrongGraphKind("expected a digraph file");
    return *digraph;
}

const GraphWithBoundary& LoadedGraph::require_boundary_graph() const {
    if (!boundary_graph) throw WrongGraphKind("expected an undirected-boundary file");
    return *boundary_graph;
}

const PlanarCircularNetwork& LoadedGraph::require_network() const {
    if (!network) throw WrongGraphKind("expected a planar-circular file");
    return *network;
}

std::size_t LoadedGraph::edge_count() const {
    switch (kind) {
        case GraphKind::Digraph:
            return digraph->edge_count();
        case GraphKind::UndirectedBoundary:
            return boundary_graph->edge_count();
        case GraphKind::PlanarCircular:
            return network->graph().edge_count();
    }
    return 0;
}

namespace {

struct EdgeRecord {
    std::string id;
    std::string from, to;  // "ends" for undirected files
};

struct FileData {
    std::string kind;
    std::string name;
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;
    std::vector<std::string> boundary;
    std::vector<std::string> sources, sinks;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> rotation;
    std::map<std::string, Rational> weights;
    bool has_boundary = false;
};

[[noreturn]] void fail(const std::string& source, int line, const std::string& message) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + message);
}

std::string string_field(const json& j, const char* field, const std::string& source,
                         int line) {
    if (!j.contains(field) || !j[field].is_string()) {
        fail(source, line, std::string("missing string field '") + field + "'");
    }
    return j[field].get<std::string>();
}

Rational weight_value(const json& value, const std::string& source, int line) {
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            fail(source, line, e.what());
        }
    }
    fail(source, line, "weight values must be integers or \"p/q\" strings");
}

FileData read_records(std::istream& in, const std::string& source) {
    FileData data;
    std::string text;
    int line = 0;
    bool have_kind = false;
    while (std::getline(in, text)) {
        ++line;
        std::size_t start = text.find_first_not_of(" \t\r");
        if (start == std::string::npos || text[start] == '#') continue;
        json record;
        try {
            record = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(source, line, e.what());
        }
        if (!record.is_object()) fail(source, line, "each record must be a JSON object");

        if (record.contains("kind")) {
            if (have_kind) fail(source, line, "duplicate kind record");
            data.kind = string_field(record, "kind", source, line);
            if (record.contains("name")) data.name = record["name"].get<std::string>();
            have_kind = true;
        } else if (!have_kind) {
            fail(source, line, "the first record must declare the graph kind");
        } else if (record.contains("vertex")) {
            data.vertices.push_back(string_field(record, "vertex", source, line));
        } else if (record.contains("vertices")) {
            for (const auto& v : record["vertices"]) {
                data.vertices.push_back(v.get<std::string>());
            }
        } else if (record.contains("edge")) {
            const json& e = record["edge"];
            EdgeRecord edge;
            edge.id = string_field(e, "id", source, line);
            if (e.contains("ends")) {
                if (!e["ends"].is_array() || e["ends"].size() != 2) {
                    fail(source, line, "edge 'ends' must list two vertices");
                }
                edge.from = e["ends"][0].get<std::string>();
                edge.to = e["ends"][1].get<std::string>();
            } else {
                edge.from = string_field(e, "tail", source, line);
                edge.to = string_field(e, "head", source, line);
            }
            for (const auto& other : data.edges) {
                if (other.id == edge.id) fail(source, line, "duplicate edge id " + edge.id);
            }
            data.edges.push_back(std::move(edge));
        } else if (record.contains("boundary")) {
            data.boundary = record["boundary"].get<std::vector<std::string>>();
            data.has_boundary = true;
        } else if (record.contains("sources")) {
            data.sources = record["sources"].get<std::vector<std::string>>();
        } else if (record.contains("sinks")) {
            data.sinks = record["sinks"].get<std::vector<std::string>>();
        } else if (record.contains("rotation")) {
            const json& r = record["rotation"];
            std::string vertex = string_field(r, "vertex", source, line);
            if (!r.contains("order") || !r["order"].is_array()) {
                fail(source, line, "rotation needs an 'order' array");
            }
            std::vector<std::pair<std::string, std::string>> order;
            for (const auto& end : r["order"]) {
                if (!end.is_array() || end.size() != 2) {
                    fail(source, line, "each rotation entry is [edge, \"head\"|\"tail\"]");
                }
                std::string which = end[1].get<std::string>();
                if (which != "head" && which != "tail") {
                    fail(source, line, "rotation ends are \"head\" or \"tail\"");
                }
                order.emplace_back(end[0].get<std::string>(), which);
            }
            data.rotation[vertex] = std::move(order);
        } else if (record.contains("weight")) {
            const json& w = record["weight"];
            std::string edge = string_field(w, "edge", source, line);
            if (!w.contains("value")) fail(source, line, "weight needs a 'value'");
            data.weights[edge] = weight_value(w["value"], source, line);
        } else {
            fail(source, line, "unrecognized record: " + text);
        }
    }
    if (!have_kind) fail(source, line == 0 ? 1 : line, "empty graph file");
    return data;
}

Polynomial edge_weight(const FileData& data, const std::string& id) {
    auto it = data.weights.find(id);
    if (it != data.weights.end()) return Polynomial(it->second);
    return Polynomial::variable(id);
}

LoadedGraph build_digraph(const FileData& data) {
    LoadedGraph out;
    out.kind = GraphKind::Digraph;
    out.name = data.name;
    Digraph g;
    for (const auto& v : data.vertices) g.add_vertex(v);
    for (const auto& e : data.edges) {
        g.add_edge(e.id, e.from, e.to, edge_weight(data, e.id));
    }
    out.digraph = std::move(g);
    return out;
}

LoadedGraph build_boundary_graph(const FileData& data, const std::string& source) {
    if (!data.has_boundary) {
        throw ValidationError(source + ": undirected-boundary files need a boundary record");
    }
    LoadedGraph out;
    out.kind = GraphKind::UndirectedBoundary;
    out.name = data.name;
    GraphWithBoundary g;
    for (const auto& v : data.vertices) g.add_vertex(v);
    for (const auto& e : data.edges) {
        g.add_edge(e.id, e.from, e.to, edge_weight(data, e.id));
    }
    g.set_boundary(data.boundary);
    g.validate();
    out.boundary_graph = std::move(g);
    return out;
}

LoadedGraph build_network(const FileData& data, const std::string& source) {
    if (!data.has_boundary) {
        throw ValidationError(source + ": planar-circular files need a boundary record");
    }
    LoadedGraph out;
    out.kind = GraphKind::PlanarCircular;
    out.name = data.name;
    Digraph g;
    for (const auto& v : data.vertices) g.add_vertex(v);
    std::map<std::string, int> edge_index;
    for (const auto& e : data.edges) {
        edge_index[e.id] = static_cast<int>(g.edge_count());
        g.add_edge(e.id, e.from, e.to, edge_weight(data, e.id));
    }

    auto resolve = [&](const std::vector<std::string>& names) {
        std::vector<int> out_ids;
        for (const auto& name : names) out_ids.push_back(g.vertex_index(name));
        return out_ids;
    };
    std::vector<int> boundary = resolve(data.boundary);
    std::vector<int> sources = resolve(data.sources);
    std::vector<int> sinks = resolve(data.sinks);

    std::map<int, std::vector<EdgeEnd>> rotation;
    for (const auto& [vertex, order] : data.rotation) {
        std::vector<EdgeEnd> ends;
        for (const auto& [edge_id, which] : order) {
            auto it = edge_index.find(edge_id);
            if (it == edge_index.end()) {
                throw ValidationError(source + ": rotation at '" + vertex +
                                      "' names unknown edge '" + edge_id + "'");
            }
            ends.push_back(EdgeEnd{it->second, which == "head"});
        }
        rotation[g.vertex_index(vertex)] = std::move(ends);
    }

    PlanarCircularNetwork network(std::move(g), std::move(boundary), std::move(sources),
                                  std::move(sinks), std::move(rotation));
    std::vector<std::string> problems = network.violations();
    if (!problems.empty()) {
        std::string message = source + ": invalid planar-circular network";
        for (const auto& p : problems) message += "\n  " + p;
        throw ValidationError(message);
    }
    out.network = std::move(network);
    return out;
}

}  // namespace

LoadedGraph parse_graph(std::istream& in, const std::string& source_name) {
    FileData data = read_records(in, source_name);
    if (data.kind == "digraph") return build_digraph(data);
    if (data.kind == "undirected-boundary") return build_boundary_graph(data, source_name);
    if (data.kind == "planar-circular") return build_network(data, source_name);
    throw ParseError(source_name + ": unknown graph kind '" + data.kind + "'");
}

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in, path);
}

}  // namespace combpfaff
