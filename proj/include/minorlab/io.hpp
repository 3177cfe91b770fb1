#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "minorlab/graph.hpp"

namespace minorlab {

// "n m" then m lines "u v". Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };
GraphFormat format_from_name(const std::string& name);  // "edgelist" | "graph6"
// Graph6 when the extension is .g6 or the format says so, else edge list.
Graph read_graph_file(const std::string& path, const std::string& format = "auto");

nlohmann::json vertex_set_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j);
nlohmann::json path_json(const Path& p);
// {"n": order, "edges": [[u, v], ...]}
nlohmann::json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string canonical_json(const nlohmann::json& j);

}  // namespace minorlab
